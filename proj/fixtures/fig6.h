hypergraph 4
h v2 v3 v4
h v1 v2 v3 v4
