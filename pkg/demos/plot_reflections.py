"""
Reflecting one interval through another
=======================================

``reflect(S, P, Q)`` collects the points of ``Q`` that are mirror images
``2p - s`` of a point of ``S`` about a centre in ``P``.  Endpoints are exact
rationals, and each end keeps track of whether it is included.
"""

from pexider import half_sum, parse_interval, reflect

S = parse_interval("(0,2)")
Q = parse_interval("(0,4)")

# a single centre just mirrors S
print("about 1:      ", reflect(S, parse_interval("[1,1]"), Q))

# a range of centres sweeps the mirror image along, then Q clips it
print("about [1,3/2]:", reflect(S, parse_interval("[1,3/2]"), Q))

# closed operands give closed ends; one open contributor opens the end
print("closed case:  ", reflect(parse_interval("[0,1]"), parse_interval("[2,2]"), parse_interval("[0,10]")))
print("mixed case:   ", reflect(parse_interval("[0,1)"), parse_interval("[2,2]"), parse_interval("[0,10]")))

# the midpoint set of two domains is where the third function lives
I1, I2 = parse_interval("(0,2)"), parse_interval("(4,6)")
D = half_sum(I1, I2)
print("D =", D)

# reflecting a domain through any part of D always lands inside the other domain
for h in ("[3,3]", "[5/2,7/2]", "(2,4)"):
    print(f"(I1 | {h})_I2 =", reflect(I1, parse_interval(h), I2))
