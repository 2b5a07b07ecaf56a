"""Quadratic fields: units, forms, and class numbers two independent ways.

Fundamental units come from the continued fraction of sqrt(d) (or
(1+sqrt(d))/2 when d = 1 mod 4), with exact integer arithmetic throughout.
Class numbers are counted with reduced binary quadratic forms and then
cross-checked against the finite Dirichlet class-number formula.
"""

from lgw import (
    class_number,
    class_number_analytic,
    describe_field,
    fundamental_discriminants,
    fundamental_unit,
    kronecker_symbol,
    roots_of_unity,
    unit_rank,
)

print("=== Signatures and unit ranks ===")
for d in (-1, 2):
    f = describe_field(d)
    print(f"d = {d:+d}: D = {f.D:+d}, signature ({f.sigma1},{f.sigma2}), unit rank {f.unit_rank}")
for two_r, tr in ((2, False), (4, True), (4, False)):
    s1, s2, rank = unit_rank(two_r, tr)
    kind = "totally real" if tr else "totally imaginary"
    print(f"degree {two_r}, {kind}: signature ({s1},{s2}), rank {rank}")

print()
print("=== Torsion units of imaginary fields ===")
for D in (-4, -3, -7):
    mu = roots_of_unity(D)
    print(f"D = {D}: mu_{mu.n} = {[f'{z:.3f}' for z in mu.elements]}")

print()
print("=== Fundamental units by continued fractions ===")
for d in (2, 5, 13, 94, 409):
    u = fundamental_unit(d)
    print(f"d = {d:3d}: eps = {u.as_string():<42} norm {u.norm:+d}  "
          f"regulator {u.regulator:9.4f}  Pell check {u.pell_residual()}")

print()
print("=== Class numbers: forms vs the analytic formula ===")
for D in (-163, -23, -4, 5, 12, 40, 229):
    h_forms = class_number(D)
    h_analytic = class_number_analytic(D)
    extra = ""
    if D > 0:
        extra = f"  (narrow h+ = {class_number(D, narrow=True)})"
    print(f"D = {D:+5d}: forms {h_forms}, analytic {h_analytic}{extra}")

print()
print("=== Exhaustive dual-route agreement, |D| <= 300 ===")
count = 0
for D in fundamental_discriminants(-300, 300):
    assert class_number(D) == class_number_analytic(D)
    count += 1
print(f"{count} fundamental discriminants, all agree.")

print()
print("=== The Kronecker character behind the analytic route ===")
D = -23
row = [kronecker_symbol(D, a) for a in range(1, 24)]
print(f"chi_{D}(1..23) = {row}")
print(f"sum a*chi(a) = {sum(a * kronecker_symbol(D, a) for a in range(1, 23))}"
      f"  ->  h = 2*69/(2*23) = {class_number_analytic(D)}")
