"""Walk the anti-nef semigroup of E8: Artin cycle, Q-generators, and the
smallest exponents found among short cycles."""
from lojax import cycles as cy
from lojax.catalog import load_entry

g = load_entry("E8").graph
z = cy.artin_cycle(g)
print("Artin cycle", cy.format_cycle(z.coeffs), "multiplicity", cy.multiplicity(z))

print("\nQ-generators")
for q in sorted(cy.q_generators(g).coefficient_tuples()):
    d = cy.Cycle(g, q)
    print(f"  {cy.format_cycle(q):28s} length {cy.length(d):3d}  L0 {cy.loj_exponent(d)}")

entries = cy.enumerate_antinef(g, 15)
print(f"\n{len(entries)} anti-nef cycles of length <= 15")
for e in sorted(entries, key=lambda e: (e.length, e.loj_exponent))[:10]:
    print(f"  {cy.format_cycle(e.cycle.coeffs):28s} length {e.length:3d}  L0 {e.loj_exponent}")
