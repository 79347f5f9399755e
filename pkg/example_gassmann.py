from tools.perm import read_pgrp
from tools.gassmann import Action, almost_conjugate, perm_reps_equivalent, condition_one, search_gassmann_pairs

import os.path

FILE_DIR = os.path.dirname(os.path.realpath(__file__))

# The affine group of Z/8 contains the classical Gassmann pair
group = read_pgrp(os.path.join(FILE_DIR, "data", "agl1z8.pgrp"))
h = read_pgrp(os.path.join(FILE_DIR, "data", "agl1z8_h.pgrp"))
k = read_pgrp(os.path.join(FILE_DIR, "data", "agl1z8_k.pgrp"))

# Equal class intersection counts
verdict, certificate = almost_conjugate(group, h, k)
print(certificate)

# Equivalent actions on the cosets, and every element of H conjugate into K
print(perm_reps_equivalent(group, Action.on_cosets(group, h), Action.on_cosets(group, k)))
print(condition_one(group, h, k))

# The pair is found again by the exhaustive search
for h, k, certificate in search_gassmann_pairs(group):
    print(h, k)
