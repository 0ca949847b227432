"""Frozen reference tables used across the test suite.

All cells are canonical polynomial strings (LaurentPoly.from_string).
B_TABLE and H_TABLE hold the E-polynomials of the generator-count
strata of B^[n] and H^[n]; CHI_TABLE their Euler characteristics;
Y0_TABLE the E-polynomials of points on the punctured plane.
"""

# E(B^[n]_m): rows n=1..14, columns m=2..5
B_TABLE = {
    (1, 2): "1", (1, 3): "0", (1, 4): "0", (1, 5): "0",
    (2, 2): "t+1", (2, 3): "0", (2, 4): "0", (2, 5): "0",
    (3, 2): "t^2+t", (3, 3): "1", (3, 4): "0", (3, 5): "0",
    (4, 2): "t^3+2 t^2", (4, 3): "t+1", (4, 4): "0", (4, 5): "0",
    (5, 2): "t^4+2 t^3-t", (5, 3): "2 t^2+2 t+1", (5, 4): "0", (5, 5): "0",
    (6, 2): "t^5+3 t^4+t^3-t^2", (6, 3): "2 t^3+3 t^2+t", (6, 4): "1", (6, 5): "0",
    (7, 2): "t^6+3 t^5+t^4-2 t^3-t^2", (7, 3): "3 t^4+5 t^3+3 t^2",
    (7, 4): "t+1", (7, 5): "0",
    (8, 2): "t^7+4 t^6+2 t^5-2 t^4-t^3", (8, 3): "3 t^5+7 t^4+4 t^3-t",
    (8, 4): "2 t^2+2 t+1", (8, 5): "0",
    (9, 2): "t^8+4 t^7+3 t^6-3 t^5-2 t^4", (9, 3): "4 t^6+9 t^5+7 t^4-2 t^2-t",
    (9, 4): "3 t^3+4 t^2+2 t+1", (9, 5): "0",
    (10, 2): "t^9+5 t^8+4 t^7-3 t^6-3 t^5",
    (10, 3): "4 t^7+12 t^6+10 t^5+t^4-3 t^3-2 t^2",
    (10, 4): "4 t^4+6 t^3+4 t^2+t", (10, 5): "1",
    (11, 2): "t^10+5 t^9+5 t^8-4 t^7-5 t^6",
    (11, 3): "5 t^8+15 t^7+15 t^6+2 t^5-5 t^4-4 t^3-t^2",
    (11, 4): "5 t^5+10 t^4+7 t^3+3 t^2", (11, 5): "t+1",
    (12, 2): "t^11+6 t^10+7 t^9-3 t^8-6 t^7+t^5",
    (12, 3): "5 t^9+18 t^8+19 t^7+4 t^6-8 t^5-7 t^4-2 t^3",
    (12, 4): "7 t^6+14 t^5+12 t^4+5 t^3-t", (12, 5): "2 t^2+2 t+1",
    (13, 2): "t^12+6 t^11+8 t^10-4 t^9-9 t^8-t^7+t^6",
    (13, 3): "6 t^10+22 t^9+27 t^8+7 t^7-10 t^6-11 t^5-4 t^4",
    (13, 4): "8 t^7+20 t^6+18 t^5+9 t^4-2 t^2-t", (13, 5): "3 t^3+4 t^2+2 t+1",
    (14, 2): "t^13+7 t^12+10 t^11-3 t^10-11 t^9-2 t^8+2 t^7",
    (14, 3): "6 t^11+26 t^10+34 t^9+12 t^8-13 t^7-16 t^6-6 t^5+t^3",
    (14, 4): "10 t^8+26 t^7+27 t^6+13 t^5-5 t^3-3 t^2-t",
    (14, 5): "5 t^4+7 t^3+5 t^2+2 t+1",
}

# E(Y0^[n]): n = 0..8
Y0_TABLE = [
    "1",
    "t^2-1",
    "t^4+t^3-t^2-t",
    "t^6+t^5-2 t^3-t^2+t",
    "t^8+t^7+t^6-t^5-3 t^4+t^2",
    "t^10+t^9+t^8-3 t^6-3 t^5+t^4+2 t^3",
    "t^12+t^11+t^10+t^9-t^8-4 t^7-3 t^6+3 t^5+2 t^4-t^3",
    "t^14+t^13+t^12+t^11-3 t^9-6 t^8-t^7+5 t^6+2 t^5-t^4",
    "t^16+t^15+t^14+t^13+t^12-t^11-5 t^10-6 t^9+t^8+7 t^7+t^6-2 t^5",
]

# E(H^[n]_m): rows n=1..4, columns m=1..3
H_TABLE = {
    (1, 1): "t^2-1", (1, 2): "1", (1, 3): "0",
    (2, 1): "t^4+t^3-t^2-t", (2, 2): "t^2+t", (2, 3): "0",
    (3, 1): "t^6+t^5-2 t^3-t^2+t", (3, 2): "t^4+2 t^3+t^2-t-1", (3, 3): "1",
    (4, 1): "t^8+t^7+t^6-t^5-3 t^4+t^2", (4, 2): "t^6+2 t^5+3 t^4-2 t^2-t",
    (4, 3): "t^2+t",
}

# chi(B^[n]_m): rows n=0..7, columns m=2..5
CHI_TABLE = {
    (0, 2): 0, (0, 3): 0, (0, 4): 0, (0, 5): 0,
    (1, 2): 1, (1, 3): 0, (1, 4): 0, (1, 5): 0,
    (2, 2): 2, (2, 3): 0, (2, 4): 0, (2, 5): 0,
    (3, 2): 2, (3, 3): 1, (3, 4): 0, (3, 5): 0,
    (4, 2): 3, (4, 3): 2, (4, 4): 0, (4, 5): 0,
    (5, 2): 2, (5, 3): 5, (5, 4): 0, (5, 5): 0,
    (6, 2): 4, (6, 3): 6, (6, 4): 1, (6, 5): 0,
    (7, 2): 2, (7, 3): 11, (7, 4): 2, (7, 5): 0,
}
