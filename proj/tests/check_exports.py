"""Parse the CLI's DOT and GraphML exports with independent readers."""

import pathlib
import sys

import networkx
import pydot

work = pathlib.Path(sys.argv[1])
topologies = ["azure-1", "azure-2", "azure-3", "cli-3", "k8s-3", "aci-3"]
failures = []

for topo in topologies:
    out = work / f"{topo}-out"
    graphs = pydot.graph_from_dot_file(str(out / "row.dot"))
    if not graphs or len(graphs) != 1:
        failures.append(f"{topo}: DOT did not parse to one graph")
        continue
    dot = graphs[0]
    if dot.get_type() != "graph":
        failures.append(f"{topo}: DOT graph is directed")
    nodes = [n for n in dot.get_nodes() if n.get_name() not in ("node", "edge", "graph")]
    dot_vertices = sum(int(n.get("count")) for n in nodes)
    dot_edges = sum(int(e.get("label")) for e in dot.get_edges())

    g = networkx.read_graphml(str(out / "row.graphml"), force_multigraph=True)
    if g.is_directed():
        failures.append(f"{topo}: GraphML graph is directed")
    if g.number_of_nodes() != dot_vertices or g.number_of_edges() != dot_edges:
        failures.append(
            f"{topo}: GraphML {g.number_of_nodes()}/{g.number_of_edges()} vs DOT {dot_vertices}/{dot_edges}")
    for _, data in g.nodes(data=True):
        if set(data) < {"type_name", "category", "is_endpoint"}:
            failures.append(f"{topo}: node lacks attributes")
            break
    print(f"{topo}: {g.number_of_nodes()} vertices, {g.number_of_edges()} edges, {len(nodes)} types")

if failures:
    print("\n".join(failures))
    sys.exit(1)
