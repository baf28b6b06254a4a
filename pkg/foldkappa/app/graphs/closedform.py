"""
FoldKappa app graphs closed form module

Exact integer evaluation of the closed forms:

    f_n(g)             = g(n + 1) - g(g + 1)/2 + 1
    theta_Q_n(g)       = g(2n - 1 - g)/2 + 1                      for 1 <= g <= n + 1
                       = (-g^2 + (4n - 3)g)/2 - n^2 + 2           for n + 2 <= g <= 2n
    ckappa_{g+1}(Q_n)  = g(2n - 1 - g)/2 + 1                      for 1 <= g <= n, n >= 3
                       = (-g^2 + (4n - 5)g)/2 - n^2 + 2n + 1      for n + 1 <= g <= 2n - 5, n >= 6

Every expression is evaluated as an integer numerator over 2, which always divides exactly.
"""

import logging
import time
from typing import Dict, Tuple

from foldkappa.app.core.exceptions import InputError
from foldkappa.app.schemas.common import is_valid_dimension
from foldkappa.app.schemas.formula import FormulaFamilyEnum, FormulaValue
from foldkappa.app.schemas.report import Report, build_report


logger = logging.getLogger(__name__)


def _halve(numerator: int) -> int:
    if numerator % 2:
        raise ArithmeticError(f'Expected an even numerator, got {numerator}')
    return numerator // 2


def _check_dimension(n: int) -> None:
    is_valid, err = is_valid_dimension(n)
    if not is_valid:
        raise InputError(err)


def f_in_domain(n: int, g: int) -> bool:
    """Whether (n, g) lies in the range 1 <= g <= n + 2 where f_n(g) is used"""
    return 1 <= g <= n + 2


def _f(n: int, g: int) -> Tuple[int, str]:
    _check_dimension(n)
    if isinstance(g, bool) or not isinstance(g, int) or g < 0:
        raise InputError(f'g must be a non-negative integer, got {g}')
    if not f_in_domain(n, g):
        logger.warning(f'f_n(g) evaluated outside 1 <= g <= n + 2 at n={n}, g={g}')
    return _halve(2 * g * (n + 1) - g * (g + 1) + 2), 'g(n+1)-g(g+1)/2+1'


def f(n: int, g: int) -> int:
    """
    f_n(g) = g(n + 1) - g(g + 1)/2 + 1.
    Values outside 1 <= g <= n + 2 are computed and logged as a warning.

    Raises:
        InputError: If n < 1 or g < 0.
    """
    return _f(n, g)[0]


def star_neighborhood_size(n: int, g: int) -> int:
    """
    The neighbourhood size of a star set counted from the construction: g members of degree n + 1,
    less 2 for each of the g - 1 centre-leaf edges, less 1 for each of the (g - 1)(g - 2)/2 leaf pairs
    sharing a neighbour besides the centre.
    """
    _check_dimension(n)
    if g < 1:
        raise InputError(f'g must be at least 1, got {g}')
    return g * (n + 1) - 2 * (g - 1) - _halve((g - 1) * (g - 2))


def _theta_qn(n: int, g: int) -> Tuple[int, str]:
    _check_dimension(n)
    if isinstance(g, bool) or not isinstance(g, int) or not 1 <= g <= 2 * n:
        raise InputError(f'theta_Q_n(g) is defined for 1 <= g <= 2n = {2 * n}, got g={g}')
    if g <= n + 1:
        return _halve(g * (2 * n - 1 - g) + 2), 'g<=n+1'
    return _halve(-g * g + (4 * n - 3) * g - 2 * n * n + 4), 'n+2<=g<=2n'


def theta_qn_formula(n: int, g: int) -> int:
    """
    The minimum neighbourhood size of a g-subset of Q_n, for 1 <= g <= 2n.

    Raises:
        InputError: If g is outside [1, 2n].
    """
    return _theta_qn(n, g)[0]


def theta_qn_seam(n: int) -> Dict[str, int]:
    """
    Both theta_Q_n branches evaluated at g = n + 1 and g = n + 2, for recording the seam.
    """
    _check_dimension(n)
    values = dict()
    for g in (n + 1, n + 2):
        values[f'first/g={g}'] = _halve(g * (2 * n - 1 - g) + 2)
        values[f'second/g={g}'] = _halve(-g * g + (4 * n - 3) * g - 2 * n * n + 4)
    return values


def _ckappa_qn(n: int, g: int) -> Tuple[int, str]:
    _check_dimension(n)
    if isinstance(g, bool) or not isinstance(g, int):
        raise InputError(f'g must be an integer, got {g}')
    if 1 <= g <= n and n >= 3:
        return _halve(g * (2 * n - 1 - g) + 2), '1<=g<=n,n>=3'
    if n + 1 <= g <= 2 * n - 5 and n >= 6:
        return _halve(-g * g + (4 * n - 5) * g - 2 * n * n + 4 * n + 2), 'n+1<=g<=2n-5,n>=6'
    raise InputError(f'ckappa_(g+1)(Q_n) has no closed form at n={n}, g={g}; it is given for 1 <= g <= n '
                     f'with n >= 3 and for n + 1 <= g <= 2n - 5 with n >= 6')


def ckappa_qn_formula(n: int, g: int) -> int:
    """
    ckappa_(g+1)(Q_n), the minimum size of a (g + 1)-component cut of Q_n.

    Raises:
        InputError: If (n, g) is outside both stated branches.
    """
    return _ckappa_qn(n, g)[0]


def formula_value(family: FormulaFamilyEnum, n: int, g: int) -> FormulaValue:
    """
    Evaluate a closed form family and record the branch that applied.

    Args:
        family (FormulaFamilyEnum): The formula family.
        n (int): The dimension.
        g (int): The argument.

    Raises:
        InputError: If (n, g) is outside the family's domain (f accepts every g >= 0 with a flag).

    Returns:
        FormulaValue: The value, branch and domain flag.
    """
    family = FormulaFamilyEnum(family)
    in_domain = True
    if family == FormulaFamilyEnum.f_n_g:
        value, branch = _f(n, g)
        in_domain = f_in_domain(n, g)
    elif family == FormulaFamilyEnum.theta_qn:
        value, branch = _theta_qn(n, g)
    else:
        value, branch = _ckappa_qn(n, g)
    return FormulaValue(family=family, n=n, g=g, value=value, branch=branch, in_stated_domain=in_domain)


def f_structure_facts(n: int) -> Report:
    """
    Check the shape of f_n:
        (a) f(n, g) < f(n, g + 1) for 1 <= g <= n - 1;
        (b) f(n, n) = f(n, n + 1) = n(n + 1)/2 + 1;
        (c) f(n, n - 1) = f(n, n + 2);
        (d) f(n, n + 2) < f(n, n) and f(n, g) < f(n, n - 1) for 1 <= g <= n - 2.
    Empty ranges hold vacuously.

    Args:
        n (int): The dimension, at least 2.

    Returns:
        Report: ``computed`` lists the violated facts, expected empty.
    """
    started = time.perf_counter()
    if n < 2:
        raise InputError(f'The structure facts need n >= 2, got {n}')
    violated = list()
    if not all(f(n, g) < f(n, g + 1) for g in range(1, n)):
        violated.append('a')
    if not f(n, n) == f(n, n + 1) == _halve(n * (n + 1)) + 1:
        violated.append('b')
    if f(n, n - 1) != f(n, n + 2):
        violated.append('c')
    if not (f(n, n + 2) < f(n, n) and all(f(n, g) < f(n, n - 1) for g in range(1, n - 1))):
        violated.append('d')
    witness = {'values': {str(g): f(n, g) for g in range(1, n + 3)}} if violated else None
    return build_report(claim_id=f'remark/f-structure/n={n}',
                        parameters={'n': n},
                        expected=list(),
                        computed=violated,
                        witness=witness,
                        started=started,
                        )


def ckappa_chain_facts(n: int) -> Report:
    """
    Check f(n, n + 2) < f(n, n + 1). With ckappa_(g+1) >= ckappa_g this bounds
    ckappa_(n+3)(FQ_n) strictly above f(n, n + 2).

    Returns:
        Report: ``computed`` is whether the inequality holds.
    """
    started = time.perf_counter()
    _check_dimension(n)
    holds = f(n, n + 2) < f(n, n + 1)
    return build_report(claim_id=f'lemma/ckappa-chain/n={n}',
                        parameters={'n': n, 'f_n_n+1': f(n, n + 1), 'f_n_n+2': f(n, n + 2)},
                        expected=True,
                        computed=holds,
                        witness=None if holds else {'f_n_n+1': f(n, n + 1), 'f_n_n+2': f(n, n + 2)},
                        started=started,
                        )
