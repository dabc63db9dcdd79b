"""The multiset-relation model: differentiation removes an element from a bag."""

from calcat import check_equation, evaluate, make_model, parse, run_suite
from calcat.models.rel import forward

model = make_model("rel", elements=2)
for term, at in (("d", "([x,y],x)"), ("dcirc", "[x,y]"), ("Delta", "[x,y]")):
    m = evaluate(parse(term), model)
    b = model.parse_elem(m.carrier.cod, at)
    print(f"{term:>6} sends {at:<12} to {model.format_vec(m.carrier.dom, forward(model, m, b))}")

for suite in ("comonoid", "calculus"):
    print(suite, run_suite(model, suite).counts())

for n in (1, 2):
    r = check_equation(make_model("rel", elements=n), "calc-object.A")
    print(f"ds = 1 with {n} element(s): {r.verdict}", r.witness or "")
