from tools.perm import read_pgrp, format_pgrp, conjugacy_classes, abelian_invariants_of_perm_group

import os.path

FILE_DIR = os.path.dirname(os.path.realpath(__file__))
PATH = os.path.join(FILE_DIR, "data", "a5.pgrp")

# Read the group, the name is taken from the file name
group = read_pgrp(PATH)
print(group)

# Conjugacy classes and abelianization
print(conjugacy_classes(group))
print(abelian_invariants_of_perm_group(group))

# Write the group back to text
print(format_pgrp(group, comment="alternating group A5"))
