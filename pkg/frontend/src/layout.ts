/** Small force-directed layout: seeded PRNG start, spring/repulsion passes.
 *  Same (nodes, edges, seed) always yields the same coordinates. */

export interface Point {
  x: number;
  y: number;
}

/** Deterministic 32-bit PRNG (mulberry32). */
export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  terms: string[],
  edges: [string, string][],
  width: number,
  height: number,
  seed: number,
  iterations = 120,
): Map<string, Point> {
  const positions = new Map<string, Point>();
  const random = mulberry32(seed);
  for (const term of terms) {
    positions.set(term, {
      x: width * (0.1 + 0.8 * random()),
      y: height * (0.1 + 0.8 * random()),
    });
  }
  if (terms.length < 2) {
    for (const p of positions.values()) {
      p.x = width / 2;
      p.y = height / 2;
    }
    return positions;
  }

  const area = width * height;
  const ideal = Math.sqrt(area / terms.length) * 0.7;
  const pad = 24;
  for (let step = 0; step < iterations; step++) {
    const cool = 1 - step / iterations;
    const shift = new Map<string, Point>(terms.map((t) => [t, { x: 0, y: 0 }]));

    for (let i = 0; i < terms.length; i++) {
      for (let j = i + 1; j < terms.length; j++) {
        const a = positions.get(terms[i])!;
        const b = positions.get(terms[j])!;
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        let dist = Math.hypot(dx, dy);
        if (dist < 1e-6) {
          dx = 0.01 * (i - j);
          dy = 0.01;
          dist = Math.hypot(dx, dy);
        }
        const push = (ideal * ideal) / dist;
        shift.get(terms[i])!.x += (dx / dist) * push;
        shift.get(terms[i])!.y += (dy / dist) * push;
        shift.get(terms[j])!.x -= (dx / dist) * push;
        shift.get(terms[j])!.y -= (dy / dist) * push;
      }
    }

    for (const [from, to] of edges) {
      const a = positions.get(from);
      const b = positions.get(to);
      if (!a || !b) continue;
      const dx = a.x - b.x;
      const dy = a.y - b.y;
      const dist = Math.max(Math.hypot(dx, dy), 1e-6);
      const pull = (dist * dist) / ideal;
      shift.get(from)!.x -= (dx / dist) * pull;
      shift.get(from)!.y -= (dy / dist) * pull;
      shift.get(to)!.x += (dx / dist) * pull;
      shift.get(to)!.y += (dy / dist) * pull;
    }

    const maxStep = 12 * cool + 1;
    for (const term of terms) {
      const p = positions.get(term)!;
      const s = shift.get(term)!;
      const magnitude = Math.max(Math.hypot(s.x, s.y), 1e-6);
      const capped = Math.min(magnitude, maxStep);
      p.x += (s.x / magnitude) * capped;
      p.y += (s.y / magnitude) * capped;
      p.x = Math.min(width - pad, Math.max(pad, p.x));
      p.y = Math.min(height - pad, Math.max(pad, p.y));
    }
  }
  return positions;
}
