"""The loop graph: a strongly graded skew ring that is the Laurent polynomial ring.

Run: python3 demos/loop_laurent.py
"""
from leavitt_partial import SkewElement, Word, decide_all, load_corpus_graph, phi
from leavitt_partial.graded import laurent_check

loop = load_corpus_graph("loop")

# phi sends the edge to 1_f d_f. In the loop 1_f = 1_v, so f behaves like x.
x = phi("f", loop)
x_inv = phi("f*", loop)
print("phi(f)      =", x)
print("phi(f*)     =", x_inv)
print("phi(f) phi(f*) =", x * x_inv)

# Powers multiply like monomials.
x3 = SkewElement.generator(loop, Word.edge("f") ** 3)
print("x^3 x^-5    =", x3 * SkewElement.generator(loop, Word.edge("f") ** -5))

rep = laurent_check(loop, 5)
print(f"Laurent table: {len(rep)} products, all exact: {rep.passed}")

# All three graded properties hold, each with a certificate that re-checks by multiplication.
for verdict in decide_all(loop):
    print(f"{verdict.prop:20s} {verdict.holds}  verified={verdict.verify(loop)}")
