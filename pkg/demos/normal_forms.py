"""Locally constant functions on the boundary path space and their canonical form.

Run: python3 demos/normal_forms.py
"""
from leavitt_partial import DFunction, load_corpus_graph
from leavitt_partial.boundary import cylinder_partition, representative

rose = load_corpus_graph("rose2")
loop = load_corpus_graph("loop")

# Every path in the rose starts with a or b, so the two cylinders tile X_v.
x = DFunction.indicator(rose, "a") + DFunction.indicator(rose, "b")
print("1_a + 1_b          =", x)

# In the loop there is a single boundary path, so every indicator collapses.
y = DFunction.indicator(loop, "f").scale(2) - DFunction.indicator(loop, "f.f")
print("2 1_f - 1_ff       =", y)

# A finer presentation is merged back bottom-up.
z = DFunction.combination(rose, y.field, [(3, rose.path("a.a")), (3, rose.path("a.b")), (1, rose.path("b"))])
print("3 1_aa + 3 1_ab + 1_b =", z)

# Equality is structural on the canonical form. Cross-check it by evaluating on one
# boundary path per cell of a depth-2 partition.
w = DFunction.indicator(rose, "a").scale(3) + DFunction.indicator(rose, "b")
cells = cylinder_partition(rose, 2)
print("same canonical form:", z == w)
print("cellwise values:    ", [str(z.evaluate(representative(rose, c))) for c in cells])
