"""Communication-bound certificates for the two-party problem F(x,y) = f(x AND y).

The toolkit never simulates protocols.  It emits the combinatorial data whose
existence lower-bounds the problem: k disjoint sensitive blocks at the
all-zero input, the 2**k index set W they span, and the substituted function
g whose AND-matrix appears inside F's restricted to W x W, all verified
entrywise.  The deterministic upper bound 2 * DT(f) is computed exactly.
"""

import json

from boolfn import and_matrix, bound_summary, det_upper_bound, submatrix_witness
from boolfn.families import and_, gip, or_

print("-- AND_2: one sensitive block {1,2} at the zero input")
cert = submatrix_witness(and_(2))
print(json.dumps(cert.to_json_dict(), indent=2))
print()

print("-- OR_3: singleton blocks, W is the whole cube, G coincides with F")
cert = submatrix_witness(or_(3))
print(f"   k = {cert.k}, |W| = {len(cert.w_points)}, g == f: {cert.g == or_(3)}")
print()

f = gip(2, 2)
print("-- bound ingredients for the 4-variable XOR-of-ANDs inner function")
summary = bound_summary(f, primes=(2, 3))
print(f"   bs(f,0) = {summary['bs_at_zero']}, DT = {summary['DT']},"
      f" deg_2 = {summary['per_prime']['2']['deg_p']}")
print(f"   DT <= bs(f,0) * deg_2^2: {summary['per_prime']['2']['dt_le_bs0_degp_sq']}")
print(f"   deterministic upper bound 2*DT = {det_upper_bound(f)}")
print()

print("-- the full AND-matrix of AND_1, exported as portable-bitmap text")
print(and_matrix(and_(1)).to_pbm())
