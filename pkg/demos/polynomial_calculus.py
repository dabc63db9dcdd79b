"""Differentiate and integrate polynomials with the symmetric-algebra model over Q."""

from calcat import check_equation, evaluate, make_model, parse
from calcat.modality.derived import derived_Kinv_composite

model = make_model("sym-q", vars=2)


def show(term, at, binding=None):
    m = evaluate(parse(term), model, binding)
    b = model.parse_elem(m.carrier.dom, at)
    print(f"{term:>12} at {at:<10} = {model.format_vec(m.carrier.cod, m.carrier.apply(b))}")


show("d", "x^2 y")
show("s", "x^2 (x) x")
show("dcirc ; d", "x y")
show("L", "x^2 y")
show("K", "1")
show("J", "x")

kinv = derived_Kinv_composite(model).carrier
for text in ("1", "x", "x y", "x^2 y"):
    b = model.parse_elem(kinv.dom, text)
    print(f"{'K^-1':>12} at {text:<10} = {model.format_vec(kinv.cod, kinv.apply(b))}")

for law in ("s.2", "FTC2", "compat", "Jinv.9", "cd-as-s.2"):
    r = check_equation(model, law)
    print(f"{law:<10} {r.verdict}" + (f"  witness {r.witness}" if r.witness else ""))
