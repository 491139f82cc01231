"""Integer strings: parsing, composition, the symmetric action, tree views.

An integer string is a word in labelled letters (closed like `1`, or open
like `u1`) and bars `|`, with an output tag `^c` / `^o`.  Strings of a fixed
colour signature form the components of a coloured operad: composition
substitutes the bar-separated segments of one string for the occurrences of
a letter in another.
"""

from operadix import strings, trees

f = strings.parse("(1u2|1u4u231||u2u4)^o")
g = strings.parse("(1u3|21u3|u31)^o")

print("f =", strings.text(f))
print("  input colours:", strings.colours(f)[0])
print("  output colour:", strings.colours(f)[1])
print("g =", strings.text(g))

fg = strings.compose(f, 2, g)
print("f o_2 g =", strings.text(fg))

x = strings.parse("(1u2|3u211||u21)^o")
print("\nsym_act([2,3,1], %s) = %s" % (strings.text(x), strings.text(strings.sym_act([2, 3, 1], x))))

# Equivariance in one law: the induced block permutation
sigma = [2, 1]
h = strings.parse("(12|21)^c")
k = strings.parse("(1|1)^c")
tau = strings.block_perm(sigma, 1, strings.arity(k))
lhs = strings.sym_act(tau, strings.compose(h, 1, k))
rhs = strings.compose(strings.sym_act(sigma, h), sigma[0], k)
print("equivariance holds:", lhs == rhs)

# Strings in the second filtration correspond to planar rooted trees
y = strings.parse("(12|21)^c")
print("\ntree view of", strings.text(y))
print(trees.render_tree(trees.tree_view(y)))
print("round trip ok:", trees.tree_to_string(trees.tree_view(y)) == y)
