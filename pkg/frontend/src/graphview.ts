/** Renders a graph response as clickable SVG; one node per API term,
 *  one line per API edge, seeds visually distinct. */

import type { GraphDto } from "./api.js";
import { forceLayout } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 420;

export interface GraphViewOptions {
  seed: number;
  onNodeClick: (term: string) => void;
}

export function renderGraph(container: HTMLElement, graph: GraphDto, options: GraphViewOptions): void {
  container.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", "concept-graph");
  svg.setAttribute("role", "img");

  const terms = graph.nodes.map((n) => n.term);
  const positions = forceLayout(
    terms,
    graph.edges.map((e) => [e.from, e.to] as [string, string]),
    WIDTH,
    HEIGHT,
    options.seed,
  );

  for (const edge of graph.edges) {
    const a = positions.get(edge.from);
    const b = positions.get(edge.to);
    if (!a || !b) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "edge");
    line.setAttribute("x1", a.x.toFixed(1));
    line.setAttribute("y1", a.y.toFixed(1));
    line.setAttribute("x2", b.x.toFixed(1));
    line.setAttribute("y2", b.y.toFixed(1));
    line.dataset.from = edge.from;
    line.dataset.to = edge.to;
    line.dataset.score = String(edge.score);
    line.dataset.measure = edge.measure;
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${edge.from} — ${edge.to} (${edge.measure} ${edge.score.toFixed(3)})`;
    line.appendChild(title);
    svg.appendChild(line);
  }

  for (const node of graph.nodes) {
    const p = positions.get(node.term)!;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", node.seed ? "node seed" : "node");
    group.dataset.term = node.term;
    group.addEventListener("click", () => options.onNodeClick(node.term));

    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", p.x.toFixed(1));
    circle.setAttribute("cy", p.y.toFixed(1));
    circle.setAttribute("r", node.seed ? "10" : "7");
    group.appendChild(circle);

    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", p.x.toFixed(1));
    label.setAttribute("y", (p.y - (node.seed ? 14 : 11)).toFixed(1));
    label.setAttribute("text-anchor", "middle");
    label.textContent = node.term;
    group.appendChild(label);

    svg.appendChild(group);
  }

  container.appendChild(svg);
}
