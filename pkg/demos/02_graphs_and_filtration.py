"""Complete-graph poset operad and the morphism q from integer strings.

A graph element decorates each pair of vertices with a level and, at level
one, an orientation.  These form a poset (lower level = more separated) and
an operad under substitution.  The map q reads off, from an integer string,
the minimal separation data its letters exhibit.
"""

from operadix import graphs, strings

x = strings.parse("(12|21)^c")
alpha = graphs.q(x)
print("q(%s):" % strings.text(x))
for (i, j), (mu, orient) in sorted(alpha.edge_dict().items()):
    arrow = {1: "->", -1: "<-"}.get(orient, "--")
    print("  %d %s %d at level %d" % (i, arrow, j, mu))

# q preserves the filtration ...
print("in filtration 2:", graphs.in_filtration(alpha, 2))

# ... and is a lax morphism: q(f o_i g) <= q(f) o_i q(g), not equality.
f = strings.parse("(121)^c")
g = strings.parse("(1|2)^c")
fg = strings.compose(f, 1, g)
qf, qg = graphs.q(f), graphs.q(g)
betas = [qg] + [
    graphs.GraphElement((qf.vertex_open[v],), {}, qf.vertex_open[v])
    for v in range(1, qf.n)
]
composed = graphs.compose(qf, betas)
print("\nq(f o_1 g) <= q(f) o_1 q(g):", graphs.leq(graphs.q(fg), composed))
print("equality:", graphs.q(fg) == composed)

print("\nall graph elements on 2 closed vertices, closed output:")
for beta in graphs.enumerate_graphs((False, False), False, 2):
    print(" ", beta.edge_dict())
