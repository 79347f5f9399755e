from tools.fp import read_presentation, parse_words, todd_coxeter, reidemeister_schreier, abelianized_relation_matrix
from tools.snf import abelian_invariants, s_invariant

import os.path

FILE_DIR = os.path.dirname(os.path.realpath(__file__))
PATH = os.path.join(FILE_DIR, "data", "von_dyck_235.fp")

presentation = read_presentation(PATH)
print(presentation)

# Cosets of the subgroup generated by a
subgroup = parse_words("a", presentation.generator_names)
table = todd_coxeter(presentation, subgroup)
print(f"index = {table.num_cosets}")

# Presentation of the subgroup and its abelianization
rewritten = reidemeister_schreier(presentation, table)
invariants = abelian_invariants(abelianized_relation_matrix(rewritten), rewritten.num_generators)
print(f"{rewritten.num_generators} Schreier generators, abelianization {invariants}, S = {s_invariant(invariants)}")
