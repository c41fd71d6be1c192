#!/usr/bin/env python3
"""Write the Les Miserables character co-occurrence network (Knuth, The Stanford
GraphBase) in the engine's json network format, using the copy bundled with
networkx."""
import json
import sys

import networkx as nx


def main(out_path: str) -> None:
    g = nx.les_miserables_graph()
    nodes = [{"id": n, "label": n} for n in g.nodes()]
    links = []
    for i, (u, v, data) in enumerate(g.edges(data=True)):
        links.append({"id": f"e{i}", "source": u, "target": v,
                      "weight": float(data.get("weight", 1)),
                      "type": "co-occurrence"})
    doc = {"directed": False, "temporal": False, "nodes": nodes, "links": links}
    with open(out_path, "w", encoding="utf-8") as f:
        json.dump(doc, f, indent=1, ensure_ascii=False)
        f.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/lesmis.json")
