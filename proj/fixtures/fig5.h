# two disjoint hyperedges
hypergraph 7
h v1 v2 v3
h v4 v5 v6 v7
