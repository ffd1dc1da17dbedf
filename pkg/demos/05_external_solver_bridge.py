"""
Using an external TSP solver for the ordering
=============================================

Maximising Moran's I over vertex orders reduces to a travelling-salesman
problem on a derived distance matrix with one dummy city.  The bridge
exports that instance in TSPLIB format for any off-the-shelf solver and
imports the resulting tour back as a vertex ordering.

Here a tiny brute-force "solver" stands in for LKH or Concorde.
"""

from itertools import permutations

from fabricmotifs import Graph, adjacency, export_tsplib, import_tour, morans_i, order

# a 7-vertex graph: a square, a triangle, one bridge
g = Graph(n=7, edges=(
    (0, 1), (0, 3), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6),
))

problem = export_tsplib(g)
print(problem.decode()[:200], "...\n")

# parse the distance matrix back out and solve the TSP exactly
lines = problem.decode().splitlines()
dim = int(next(l for l in lines if l.startswith("DIMENSION")).split(":")[1])
start = lines.index("EDGE_WEIGHT_SECTION") + 1
d = [[int(x) for x in lines[start + i].split()] for i in range(dim)]

best_len, best_tour = None, None
for rest in permutations(range(1, dim)):        # city 0 fixed; tours are cyclic
    tour = (0,) + rest
    length = sum(d[tour[k]][tour[(k + 1) % dim]] for k in range(dim))
    if best_len is None or length < best_len:
        best_len, best_tour = length, tour

# TSPLIB tours are 1-based
tour_file = "TYPE : TOUR\nTOUR_SECTION\n" + "\n".join(
    str(c + 1) for c in best_tour
) + "\n-1\nEOF\n"
ordering = import_tour(tour_file.encode(), graph_size=g.n)

print(f"optimal tour length {best_len} -> ordering {ordering.perm}")
print(f"Moran's I via solver:    {morans_i(adjacency(g, ordering)):.5f}")
print(f"Moran's I via heuristic: {order(g, method='heuristic', seed=0).morans_i:.5f}")
