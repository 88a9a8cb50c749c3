# How many digits does a base need?  Lower/upper bounds, exact values
# where a criterion decides, and the two-digit membership question.

from algdigits import (classify_f_index, f2_analysis, kovacs_sufficient,
                       make_base, quadratic_cns, sweep_quadratic)

BASES = ["x - 2", "x + 2", "x - 5", [-3, 2], "x^2 + 2x + 2",
         "x^2 + 6", "2x^2 - 3x + 2", "x^2 + x + 1"]

print(f"{'base':>16s} {'lower':>5s} {'upper':>5s} {'exact':>5s}  criteria")
for poly in BASES:
    base = make_base(poly)
    rep = classify_f_index(base)
    names = ",".join(c[0] for c in rep.certificates[1:]) or "-"
    print(f"{str(base.min_poly):>16s} {rep.lower:>5d} "
          f"{str(rep.upper):>5s} {str(rep.exact):>5s}  {names}")

# ----------------------------------------------------------------------
# Which bases could manage with just two digits?

print()
for poly in ["x + 1", "x + 2", "x - 2", "x^2 - 2", "x^3 + 2",
             "2x^2 + x + 2", "x^2 - x - 1"]:
    verdict = f2_analysis(make_base(poly))
    print(f"{poly:>14s}: {verdict.verdict.value:28s} {verdict.reason}")

# ----------------------------------------------------------------------
# For quadratics the canonical-digit question has a closed form;
# compare it against periodic-point brute force

rows = sweep_quadratic(5)
agree = sum(row.agree for row in rows)
print(f"\nquadratic sweep a2 <= 5: {agree}/{len(rows)} rows agree")
for row in rows:
    if row.criterion != quadratic_cns(row.a1, row.a2):
        raise AssertionError("criterion column must match the predicate")

# the chain condition certifies number systems in any degree
print("chain condition on x^3 + x^2 + x + 2:",
      kovacs_sufficient("x^3 + x^2 + x + 2"))
print("chain condition on x^3 + 2x^2 + x + 2:",
      kovacs_sufficient("x^3 + 2x^2 + x + 2"))
