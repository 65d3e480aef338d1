# three hyperedges on four vertices
hypergraph 4
v v1
v v2
v v3
v v4
h v1 v2 v3
h v2 v4
h v3 v4
