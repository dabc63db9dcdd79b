"""Over F2 the coderiving map stops being an integral: 1 + 1 = 0 kills a needed factor."""

from calcat import check_equation, make_model

model = make_model("sym-f2", vars=2)
for law in ("d.1", "d.2", "d.3", "d.4", "d.5"):
    print(law, check_equation(model, law).verdict)
for law in ("cd-as-s.2", "two.invertible", "taylor"):
    r = check_equation(model, law)
    print(f"{law:<15} {r.verdict}\n    {r.reason or ''} {r.witness}")
