export interface AppConfig {
  /** Base URL of the API server; "" means same origin. */
  apiBase: string;
  /** Seed for the force layout so renders (and screenshots) are stable. */
  layoutSeed: number;
}

declare global {
  interface Window {
    CONCEPTGRAPH_CONFIG?: Partial<AppConfig>;
  }
}

const DEFAULTS: AppConfig = { apiBase: "", layoutSeed: 1337 };

/** Runtime config: window.CONCEPTGRAPH_CONFIG overrides the defaults. */
export function resolveConfig(overrides?: Partial<AppConfig>): AppConfig {
  const fromWindow = typeof window !== "undefined" ? window.CONCEPTGRAPH_CONFIG : undefined;
  return { ...DEFAULTS, ...fromWindow, ...overrides };
}
