"""Exotic Tate and Hodge classes on CM abelian varieties, decided on character lattices."""
from .groups import (BlockPartition, CosetSpace, FiniteGaloisGroup, GroupError, HypothesisError, Subgroup,
                     block_partition, build_group, double_coset_commute, preset_names)
from .scenario import Scenario, load_fixture, parse_scenario, parse_text
from .verdicts import (Analysis, Verdict, check_corollary_1_2, check_s_prime, check_theorem_1_1,
                       check_theorem_1_5, check_theorem_1_7, classify_examples_a7, recover_milne99,
                       run_checks, s_prime_predicate)

__version__ = "0.1.0"
