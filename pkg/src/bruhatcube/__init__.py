"""
bruhatcube: exact combinatorics of Bruhat hypercubes, dyadically
well-distributed permutations and (0,m,2)-nets.
"""
from .perm import (Perm, compose, from_cycles, from_word, identity, inverse,
                   is_permutation, length, longest_element, parse_perm,
                   format_perm, transposition)
from .bruhat import (BruhatGraph, IntervalPoset, bruhat_graph, bruhat_leq,
                     covers, ehresmann, interval, interval_json,
                     is_boolean_interval)
from .klpoly import (d_from_r, d_invariant, d_via_diamond_closure,
                     format_poly, r_polynomial, reading_lower_bound)
from .dwd import (BasicInterval, ComplementaryBlock, CubeCoordinates,
                  SizeGuardError, complementary_blocks, decode_phi,
                  encode_phi, enumerate_dwd, flip, gen_x, gen_y, is_dwd)
from .tadic import (NetPointSet, SudokuGrid, TCubeCoordinates, count_dwd_t,
                    decode_phi_t, digital_net_coset, encode_phi_t, gen_x_t,
                    gen_y_t, is_dwd_t, is_net, net_points, parse_net,
                    parse_sudoku, validate_sudoku)
from .embed import (EmbeddedGraph, check_good_embedding, geometric_embedding,
                    rank2_cosets)
from .census import (CensusRow, SearchState, TheoremReport, baseline_n12,
                     funsearch_pair, funsearch_pair_start3, interval_census,
                     local_search_d, max_d, verify_main_theorem)

__version__ = "0.1.0"
