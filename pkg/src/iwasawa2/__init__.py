"""Iwasawa lambda-invariants for cyclotomic Z_2-towers over imaginary
quadratic fields and their Fermat-prime generalizations, with an exact
analytic class-number oracle and a cyclic-group cohomology engine."""

from .arith import (
    multiplicative_order,
    ord_p,
    smith_normal_form,
    unit_group_structure,
)
from .characters import (
    DirichletCharacter,
    char_conductor,
    char_eval,
    char_is_odd,
    char_mul,
    even_two_power_characters,
    kronecker_character,
)
from .cohomology import (
    CohomologyReport,
    CyclicGModule,
    brute_force_cohomology,
    chi_additivity_check,
    cohomology,
    indecomposable_module,
    norm_element_matrix,
)
from .cyclotomic import CyclotomicNumber, cyclo_lift, cyclo_mul, cyclo_zeta, is_rational
from .formulas import (
    DecompositionFamily,
    IwasawaFit,
    LambdaResult,
    RHInput,
    consistency_check,
    decomposition_solve,
    ferrero_lambda,
    fit_growth,
    kida_general,
    main_lambda,
    riemann_hurwitz,
    vanishing_criterion,
)
from .oracle import (
    ClassNumberReport,
    FormClassGroup,
    dirichlet_class_number,
    generalized_bernoulli_B1,
    h_minus,
    lambda_from_oracle,
    odd_characters_of_level,
    reduced_forms,
)
from .splitting import (
    PlaceSplittingReport,
    RamifiedSet,
    fermat_identity_check,
    fermat_number,
    primes_above_in_Qinf,
    primes_above_in_fermat_tower,
    ramified_set,
    residue_degree_in_Qn,
    t_infinity,
    two_inert_in_k,
    unit_euler_char,
)

__version__ = "0.1.0"
