"""Why the rose with two petals is not strongly graded, clean or unit-regular.

Run: python3 demos/rose_obstruction.py
"""
from leavitt_partial import SkewElement, decide_all, load_corpus_graph, lpa_equals, phi
from leavitt_partial.partial_action import is_global
from leavitt_partial.skew import try_invert_homogeneous

rose = load_corpus_graph("rose2")

# The Cuntz-Krieger relation at v, decided through phi.
print("a a* + b b* = v :", lpa_equals("a a* + b b*", "v", rose))
print("a* b           :", phi("a* b", rose))

# The action is partial: X_a misses the paths that start with b.
print("global action  :", is_global(rose).explanation)

# 1_a d_a has no inverse. A left annihilator shows it.
x = SkewElement.generator(rose, "a")
res = try_invert_homogeneous(x)
print("inverse search :", type(res).__name__, "with z =", res.annihilator)
print("z x            =", res.annihilator * x)

for verdict in decide_all(rose):
    print(f"{verdict.prop:20s} {verdict.holds}  {verdict.describe()}")
