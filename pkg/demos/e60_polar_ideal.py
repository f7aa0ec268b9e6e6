"""Polar ideal of the E6,0 triple point: Groebner basis, colength and the
smallest power of the maximal ideal it contains."""
from lojax.catalog import load_entry
from lojax.poly import GREVLEX, buchberger, colength, jacobian_minors, power_membership
from lojax.weighted import haraux_bounds

e = load_entry("E6,0")
gens = list(e.equations) + jacobian_minors(e.equations, 2)
print(len(gens), "generators (equations plus nonzero 2x2 minors)")

basis = buchberger(gens, GREVLEX)
print(len(basis), "elements in the reduced basis:")
for f in basis:
    print("  ", f)

print("colength", colength(gens))
p = next(p for p in range(1, 10) if power_membership(gens, p))
print(f"m^{p} is contained in the ideal, m^{p - 1} is not")

hb = haraux_bounds(e.equations, e.weights, 2)
print(f"weighted bounds {hb.lower} <= L0 <= {hb.upper}")
