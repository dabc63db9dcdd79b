"""Shuffle words with a polynomial slot: J is invertible while K is not."""

from calcat import evaluate, make_model, parse, run_suite
from calcat.errors import NotInvertibleError
from calcat.modality.derived import derived_Kinv_composite

model = make_model("rb", vars=2)
for term, at in (("d", "<x> x^2"), ("s", "<> x^2 (x) x"), ("K", "<x> 1"), ("J", "<x> 1")):
    m = evaluate(parse(term), model)
    b = model.parse_elem(m.carrier.dom, at)
    print(f"{term:>2} at {at:<14} = {model.format_vec(m.carrier.cod, m.carrier.apply(b))}")

try:
    derived_Kinv_composite(model)
except NotInvertibleError as err:
    print("K is not invertible:", err)

for r in run_suite(model, "separations").results:
    print(f"{r.id:<22} {r.verdict:<24} {r.witness or ''}")
