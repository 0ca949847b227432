"""
Strata tables two ways
======================

E-polynomials of the strata of the punctual Hilbert scheme B^[n] by
minimal generator count m, computed through the triangular matrix
pipeline and through the closed-form q-series, then printed side by
side with their Euler characteristics.
"""

from hilbstrata import chi_series, closed_form_B, compute_B, mu_max

ORDER = 12
TOP = mu_max(ORDER)

b = compute_B(ORDER)
closed = {m: closed_form_B(m, ORDER) for m in range(1, TOP + 1)}
chi = {m: chi_series(m, ORDER) for m in range(1, TOP + 1)}

print(f"E(B^[n]_m; t) for n <= {ORDER} (matrix pipeline == closed form):\n")
for n in range(1, ORDER + 1):
    for m in range(2, TOP + 1):
        matrix_cell = b.get(m, n)
        series_cell = closed[m].coeff(n)
        assert matrix_cell == series_cell, (m, n)
        if matrix_cell:
            chi_val = chi[m].coeff(n).eval_at_one()
            assert matrix_cell.eval_at_one() == chi_val
            print(f"  n={n:<3} m={m}:  {str(matrix_cell):<46} chi = {chi_val}")
    print()

print("every cell agreed across the two pipelines, and specializes at")
print("t = 1 to the Euler characteristic from the chi series.")
