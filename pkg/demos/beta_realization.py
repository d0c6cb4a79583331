"""The second realization through partial symmetries beta, on the Toeplitz graph.

Run: python3 demos/beta_realization.py
"""
from leavitt_partial import DsFunction, Word, beta_extend, iso_agreement_check, load_corpus_graph, vertex_replacement
from leavitt_partial.beta import verify_orthogonality, verify_semi_saturated

t = load_corpus_graph("toeplitz")  # v with a loop f and an edge g into the sink w

# Vertex indicators are replaced by edge indicators.
print("1_v ->", vertex_replacement(t, "v"))
print("1_w ->", vertex_replacement(t, "w"))

# beta_{f g} carries X_{(fg)^-1} = X_w onto the cylinder of the path fg.
sink = vertex_replacement(t, "w")
print("beta_{f.g}(1_w) =", beta_extend(Word.parse("f.g"), sink))
# beta_g is only defined on functions supported in X_w, so 1_f falls outside.
print("beta_{g}(1_f)   =", beta_extend(Word.parse("g"), DsFunction.indicator(t, Word.parse("f"))))
# f.g' has an empty domain: f and g end at different vertices.
print("beta_{f.g'}(1_g) =", beta_extend(Word.parse("f.g'"), DsFunction.indicator(t, Word.parse("g"))))

print("semi-saturated  :", verify_semi_saturated(t, 3).passed)
print("orthogonal      :", verify_orthogonality(t).passed)
rep = iso_agreement_check(t)
print(f"agreement       : {len(rep)} checks, all pass: {rep.passed}")
