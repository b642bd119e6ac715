"""Exact Chow classes of relative-position loci on the type A flag manifold.

The package computes, over exact arithmetic, the Schubert-basis classes of
the loci of Borel subgroups in a fixed relative position with their image
under a Frobenius endomorphism or under conjugation by a regular
semisimple or regular unipotent element, together with component counts,
basis transition matrices and the coincidence classes of the semisimple
family.
"""

from .permgroup import (
    CosetData,
    Perm,
    Twist,
    all_elements,
    apply_twist,
    bruhat_leq,
    compose,
    coset_data,
    identity,
    inverse,
    length,
    longest_element,
    parse_perm,
    reduced_word,
    render_perm,
    simple_reflection,
    support,
    twisted_support_closure,
    word_to_perm,
)
from .polyring import (
    BankLayout,
    ExactDivisionError,
    LaurentPoly,
    MultiPoly,
    eval_univariate,
    leading_data,
    parse_laurent,
    parse_multipoly,
)
from .schubert import (
    Engine,
    SchubertVector,
    divided_difference,
    divided_difference_word,
    double_schubert_w0,
    expand_in_schubert_basis,
    get_engine,
    omega_y,
    schubert_poly,
    schubert_product,
    staircase,
)
from .hecke import (
    HeckeElement,
    f_coefficient,
    f_w,
    r_polynomial,
    render_hecke,
    t_basis,
    t_inverse,
    t_mul,
)
from .dlclass import (
    ClassPath,
    ClassReport,
    EqualityGroup,
    Kind,
    TransitionMatrix,
    admissible_pairs,
    build_report,
    class_X,
    class_Y_ss,
    class_Y_unip,
    class_via_divided_diff,
    components_X,
    components_Y_ss,
    equality_classes,
    report_from_json,
    report_to_json,
    transition_matrix,
)
from .cache import ProductCache

__version__ = "0.1.0"
