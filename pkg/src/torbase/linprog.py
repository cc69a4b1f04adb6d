"""Tiny exact linear programming over the rationals (two-phase simplex).

Problems here are very small (a handful of free variables, a few dozen
constraints), so a dense Fraction tableau with Bland's rule is plenty.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def lp_max(c, a_ub=(), b_ub=(), a_eq=(), b_eq=()):
    """Maximize c.x subject to a_ub.x <= b_ub and a_eq.x == b_eq, x free.

    Returns (status, x, value) with exact Fractions.
    """
    n = len(c)
    rows = []
    # free x -> xp - xn, both >= 0
    for coeffs, rhs, eq in [(a_ub, b_ub, False), (a_eq, b_eq, True)]:
        for row, b in zip(coeffs, rhs):
            ext = [Fraction(v) for v in row] + [Fraction(-v) for v in row]
            rows.append((ext, Fraction(b), eq))
    obj = [Fraction(v) for v in c] + [Fraction(-v) for v in c]
    status, sol = _two_phase(rows, obj, 2 * n)
    if status != OPTIMAL:
        return status, None, None
    x = [sol[i] - sol[n + i] for i in range(n)]
    value = sum(ci * xi for ci, xi in zip([Fraction(v) for v in c], x))
    return OPTIMAL, x, value


def _two_phase(rows, obj, nvars):
    m = len(rows)
    # columns: structural | slacks (ub rows) | artificials
    nslack = sum(0 if eq else 1 for _, _, eq in rows)
    tableau = []
    basis = []
    slack_i = 0
    art_cols = []
    total = nvars + nslack  # artificials appended below as needed
    # first pass to know which rows need artificials
    prepared = []
    for ext, b, eq in rows:
        row = list(ext) + [Fraction(0)] * nslack
        if not eq:
            row[nvars + slack_i] = Fraction(1)
            this_slack = nvars + slack_i
            slack_i += 1
        else:
            this_slack = None
        if b < 0:
            row = [-v for v in row]
            b = -b
            if this_slack is not None:
                # slack coefficient is now -1: need artificial
                this_slack = None
        prepared.append((row, b, this_slack))
    for row, b, this_slack in prepared:
        if this_slack is not None:
            basis.append(this_slack)
        else:
            art_cols.append(total)
            basis.append(total)
            total += 1
    for idx, (row, b, this_slack) in enumerate(prepared):
        full = row + [Fraction(0)] * len(art_cols)
        if this_slack is None:
            full[basis[idx]] = Fraction(1)
        tableau.append(full + [b])

    ncols = total
    if art_cols:
        # phase 1: maximize -(sum of artificials)
        z = [Fraction(0)] * (ncols + 1)
        for j in art_cols:
            z[j] = Fraction(-1)
        z = _price_out(z, tableau, basis)
        status = _simplex(tableau, basis, z, ncols)
        if status != OPTIMAL or z[-1] != 0:
            return INFEASIBLE, None
        _drive_out_artificials(tableau, basis, art_cols, nvars + nslack)
        # drop artificial columns
        keep = nvars + nslack
        tableau = [row[:keep] + [row[-1]] for row in tableau]
        ncols = keep
        basis = list(basis)
        live = [i for i, bv in enumerate(basis) if bv < keep]
        tableau = [tableau[i] for i in live]
        basis = [basis[i] for i in live]

    z = [Fraction(0)] * (ncols + 1)
    for j, v in enumerate(obj):
        z[j] = Fraction(v)
    z = _price_out(z, tableau, basis)
    status = _simplex(tableau, basis, z, ncols)
    if status != OPTIMAL:
        return status, None
    sol = [Fraction(0)] * ncols
    for i, bv in enumerate(basis):
        sol[bv] = tableau[i][-1]
    return OPTIMAL, sol


def _price_out(z, tableau, basis):
    """Express the objective row in terms of the current nonbasic columns."""
    z = list(z)
    for i, bv in enumerate(basis):
        coef = z[bv]
        if coef != 0:
            row = tableau[i]
            for j in range(len(z) - 1):
                z[j] -= coef * row[j]
            z[-1] += coef * row[-1]
    return z


def _simplex(tableau, basis, z, ncols):
    """Maximize; z holds reduced costs, z[-1] the current value.  Bland."""
    while True:
        enter = -1
        for j in range(ncols):
            if z[j] > 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        for i, row in enumerate(tableau):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(tableau, basis, z, leave, enter)


def _pivot(tableau, basis, z, leave, enter):
    row = tableau[leave]
    piv = row[enter]
    tableau[leave] = [v / piv for v in row]
    row = tableau[leave]
    for i, other in enumerate(tableau):
        if i != leave and other[enter] != 0:
            coef = other[enter]
            tableau[i] = [a - coef * b for a, b in zip(other, row)]
    coef = z[enter]
    if coef != 0:
        for j in range(len(z) - 1):
            z[j] -= coef * row[j]
        # entering variable takes value row[-1]; objective gains coef * that
        z[-1] += coef * row[-1]
    basis[leave] = enter


def _drive_out_artificials(tableau, basis, art_cols, nreal):
    art = set(art_cols)
    for i in range(len(basis)):
        if basis[i] in art:
            row = tableau[i]
            piv = next((j for j in range(nreal) if row[j] != 0), None)
            if piv is not None:
                dummy = [Fraction(0)] * len(row)
                _pivot(tableau, basis, dummy, i, piv)
