from tools.catalog import build_q8abc, q8abc_presentation
from tools.obstruction import verify_cs_finite

# Q(8a,b,c) is built from its presentation by coset enumeration
print(q8abc_presentation(1, 5, 3))
group = build_q8abc(1, 5, 3)
print(group.describe())

# Exhaustive check over all quotients and all their Gassmann pairs
verification = verify_cs_finite(group)
print(verification)
