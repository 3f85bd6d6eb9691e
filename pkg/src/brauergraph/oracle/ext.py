"""Cohomology over the oracle: explicit resolutions as complexes of
projectives, chain-map lifting, Yoneda products, and closure of the
subalgebra generated in low degrees.

A degree-n cohomology element of the simple at s is a functional on the
generators of the n-th projective in a fixed resolution of s; the basis
dual to the generators is the canonical basis.  Products are computed by
lifting one factor through the resolution of its target and composing.
"""
from __future__ import annotations

from collections import Counter
from typing import Optional

from ..resolution import ResolutionStep
from . import linalg
from .algebra import FiniteDimAlgebra
from .modules import (
    Module,
    ModuleMap,
    _apply,
    direct_sum,
    kernel_module,
    projective_cover,
    projective_module,
    simple_module,
    zero_module,
)


class ProjResolution:
    """Explicit complex of projectives over a simple module.

    ``summands[n]`` lists (edge, generation degree or None, position or
    None) per summand of the n-th projective; ``generators[n]`` holds the
    flat basis index of each summand's generator inside ``modules[n]``.
    """

    def __init__(self, la: FiniteDimAlgebra, source: str):
        self.la = la
        self.source = source
        self.modules: list[Module] = []
        self.maps: list[Optional[ModuleMap]] = [None]  # maps[n]: Q^n -> Q^{n-1}
        self.summands: list[list[tuple[str, Optional[int], Optional[int]]]] = []
        self.generators: list[list[tuple[str, int]]] = []  # (vertex, index in block)

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_steps(cls, la: FiniteDimAlgebra, source: str,
                   steps: list[ResolutionStep]) -> "ProjResolution":
        res = cls(la, source)
        offsets_prev: Optional[list[dict[str, int]]] = None
        mods_prev = None
        for step in steps:
            gen_by_pos = dict(step.generation_degrees or ())
            projs = []
            info = []
            for pos, edge in step.summands:
                deg = gen_by_pos.get(pos)
                projs.append(projective_module(la, edge, gen_degree=deg or 0))
                info.append((edge, deg, pos))
            big, offsets = direct_sum(projs)
            res.modules.append(big)
            res.summands.append(info)
            gens = []
            for k, (edge, _, _) in enumerate(info):
                local = projs[k]._proj_pos[la.basis_index[(edge, ())]]
                gens.append((edge, offsets[k][edge] + local))
            res.generators.append(gens)
            if offsets_prev is not None:
                res.maps.append(
                    _map_from_paths(la, res.modules[-1], res.modules[-2],
                                    offsets, offsets_prev, projs, mods_prev,
                                    step.differential)
                )
            offsets_prev = offsets
            mods_prev = projs
        return res

    @classmethod
    def from_oracle(cls, la: FiniteDimAlgebra, source: str, n_max: int) -> "ProjResolution":
        res = cls(la, source)
        cur = simple_module(la, source)
        prev_incl: Optional[ModuleMap] = None
        for n in range(n_max + 1):
            P, cover, summ = projective_cover(cur)
            res.modules.append(P)
            res.summands.append([(e, d, None) for e, d in summ])
            gens = []
            for k, (e, _) in enumerate(summ):
                proj = P._cover_projs[k]
                local = proj._proj_pos[la.basis_index[(e, ())]]
                gens.append((e, P._cover_offsets[k][e] + local))
            res.generators.append(gens)
            if prev_incl is not None:
                res.maps.append(cover.compose(prev_incl))
            K, incl = kernel_module(cover)
            cur, prev_incl = K, incl
        return res

    # -- checks ----------------------------------------------------------

    def complex_is_zero(self, n_max: Optional[int] = None) -> list[int]:
        """Degrees n where f^{n-1} o f^n fails to vanish."""
        bad = []
        top = len(self.modules) - 1 if n_max is None else n_max
        for n in range(2, top + 1):
            comp = self.maps[n].compose(self.maps[n - 1])
            if not comp.is_zero():
                bad.append(n)
        return bad

    def exactness_defects(self, n_max: Optional[int] = None) -> list[int]:
        """Degrees n with dim ker f^n != dim im f^{n+1} (f^0 the augmentation)."""
        bad = []
        top = (len(self.modules) - 2) if n_max is None else n_max
        for n in range(0, top + 1):
            if n == 0:
                ker = self.modules[0].total_dim - 1
            else:
                ker = self.maps[n].total_kernel_dim()
            im = self.maps[n + 1].total_image_dim()
            if ker != im:
                bad.append(n)
        return bad

    def minimality_defects(self) -> list[int]:
        """Degrees whose differential has an entry outside the radical."""
        bad = []
        for n in range(1, len(self.modules)):
            fmap = self.maps[n]
            for gv, gi in self.generators[n - 1]:
                block = fmap.blocks.get(gv, [])
                for row in block:
                    if row and not self.la.field.is_zero(row[gi]):
                        bad.append(n)
                        break
        return sorted(set(bad))

    def summand_multiset(self, n: int) -> Counter:
        return Counter(e for e, _, _ in self.summands[n])

    def generation_degrees(self, n: int) -> list[int]:
        return sorted({d for _, d, _ in self.summands[n] if d is not None})


def _block_sizes(la: FiniteDimAlgebra, e: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for i in la.basis_by_source[e]:
        v = la.word_target(la.basis[i])
        out[v] = out.get(v, 0) + 1
    return out


def _map_from_paths(la: FiniteDimAlgebra, source_mod: Module, target_mod: Module,
                    col_offsets, row_offsets, col_projs, row_projs,
                    differential: dict) -> ModuleMap:
    """Evaluate a sparse path matrix as a module map between explicit sums."""
    f = la.field
    blocks = {
        v: linalg.zeros(source_mod.dim(v), target_mod.dim(v), f)
        for v in la.quiver.vertices
    }
    for (row, col), (sign, path) in differential.items():
        pk = tuple(la.quiver.arrow_index[a] for a in path.arrows)
        proj = col_projs[col]
        for v, idxs in proj._proj_words.items():
            for local, i in enumerate(idxs):
                word = la.basis[i]
                vec = la.word_to_vec(path.source, pk + word[1])
                if not vec:
                    continue
                r = col_offsets[col][v] + local
                for j, coeff in vec.items():
                    tv = la.word_target(la.basis[j])
                    tc = row_offsets[row][tv] + row_projs[row]._proj_pos[j]
                    val = coeff if sign > 0 else f.neg(coeff)
                    blocks[tv][r][tc] = f.add(blocks[tv][r][tc], val)
    return ModuleMap(source_mod, target_mod, blocks)


# ----------------------------------------------------------------------
# cohomology elements and products


class ExtElement:
    """A functional on the generators of one projective of one resolution."""

    def __init__(self, res: ProjResolution, degree: int, coeffs: dict[int, object]):
        self.res = res
        self.degree = degree
        self.coeffs = dict(coeffs)

    @property
    def source(self) -> str:
        return self.res.source

    def targets(self) -> set[str]:
        return {
            self.res.summands[self.degree][i][0]
            for i, c in self.coeffs.items()
            if not self.res.la.field.is_zero(c)
        }

    def restrict_to_target(self, t: str) -> "ExtElement":
        coeffs = {
            i: c
            for i, c in self.coeffs.items()
            if self.res.summands[self.degree][i][0] == t
        }
        return ExtElement(self.res, self.degree, coeffs)

    def is_zero(self) -> bool:
        f = self.res.la.field
        return all(f.is_zero(c) for c in self.coeffs.values())


def canonical_element(res: ProjResolution, degree: int, position: int) -> ExtElement:
    for i, (_, _, pos) in enumerate(res.summands[degree]):
        if pos == position:
            return ExtElement(res, degree, {i: res.la.field.one})
    raise ValueError(f"no summand at position {position} in degree {degree}")


def lift_through(x: ExtElement, target_res: ProjResolution, m: int) -> ModuleMap:
    """Chain map Q^{n+m} of the source resolution -> Q^m of the target's.

    Every coefficient of ``x`` must sit on a summand whose edge is the
    target resolution's simple.
    """
    la = x.res.la
    f = la.field
    n = x.degree
    src = x.res
    t = target_res.source
    for i, c in x.coeffs.items():
        if not f.is_zero(c) and src.summands[n][i][0] != t:
            raise ValueError("element does not map into the requested simple")

    # psi_0 on generators: scalar times the generator of Q^0 of the target
    psi = _map_on_generators(
        src, n, target_res.modules[0],
        {
            i: (target_res.generators[0][0][0],
                _unit_vec(target_res.modules[0], target_res.generators[0][0], f,
                          x.coeffs.get(i, f.zero)))
            for i in range(len(src.summands[n]))
        },
    )
    for k in range(1, m + 1):
        rhs = src.maps[n + k].compose(psi)
        g = target_res.maps[k]
        assignments = {}
        for j, (gv, gi) in enumerate(src.generators[n + k]):
            b = rhs.blocks.get(gv, [])
            bvec = list(b[gi]) if b else [f.zero] * target_res.modules[k - 1].dim(gv)
            gblock = g.blocks.get(gv, [])
            if not gblock:
                gblock = linalg.zeros(target_res.modules[k].dim(gv),
                                      target_res.modules[k - 1].dim(gv), f)
            y = linalg.solve_left(gblock, bvec, f)
            if y is None:
                raise RuntimeError("comparison lifting failed; complex not exact?")
            assignments[j] = (gv, y)
        psi = _map_on_generators(src, n + k, target_res.modules[k], assignments)
    return psi


def _unit_vec(mod: Module, gen: tuple[str, int], f, scalar) -> list:
    v, idx = gen
    out = [f.zero] * mod.dim(v)
    out[idx] = scalar
    return out


def _map_on_generators(src: ProjResolution, n: int, target: Module,
                       assignments: dict[int, tuple[str, list]]) -> ModuleMap:
    """Extend generator images to a module map on the n-th projective."""
    la = src.la
    f = la.field
    big = src.modules[n]
    blocks = {v: linalg.zeros(big.dim(v), target.dim(v), f) for v in la.quiver.vertices}
    # walk each summand's basis words and push the generator image along them
    offset: dict[str, int] = {v: 0 for v in la.quiver.vertices}
    for j, (edge, _, _) in enumerate(src.summands[n]):
        gv, gvec = assignments[j]
        sizes = _block_sizes(la, edge)
        local_index: dict[str, int] = {}
        for i in la.basis_by_source[edge]:
            word = la.basis[i]
            v = la.word_target(word)
            li = local_index.get(v, 0)
            local_index[v] = li + 1
            row = offset[v] + li
            arrows = [la.quiver.arrows[tt] for tt in word[1]]
            tv, img = _apply_target(target, gv, gvec, arrows, f)
            if any(not f.is_zero(xx) for xx in img):
                blocks[tv][row] = [
                    f.add(blocks[tv][row][c], img[c]) for c in range(len(img))
                ]
        for v in offset:
            offset[v] += sizes.get(v, 0)
    return ModuleMap(big, target, blocks)


def _apply_target(target: Module, v: str, vec: list, arrows: list, f):
    return _apply(target, v, vec, arrows)


def yoneda_multiply(y: ExtElement, x: ExtElement,
                    resolutions: Optional[dict[str, ProjResolution]] = None) -> ExtElement:
    """Composite class y o x where x ends at the simple y starts from."""
    f = x.res.la.field
    out: dict[int, object] = {}
    for t in x.targets():
        if y.res.source != t:
            raise ValueError("factors not composable")
    psi = lift_through(x, y.res, y.degree)
    for j in range(len(x.res.summands[x.degree + y.degree])):
        gv, gi = x.res.generators[x.degree + y.degree][j]
        block = psi.blocks.get(gv, [])
        if not block:
            continue
        row = block[gi]
        total = f.zero
        for i, c in y.coeffs.items():
            if f.is_zero(c):
                continue
            tgv, tgi = y.res.generators[y.degree][i]
            if tgv == gv:
                total = f.add(total, f.mul(c, row[tgi]))
        if not f.is_zero(total):
            out[j] = total
    return ExtElement(x.res, x.degree + y.degree, out)


def ext_space_dims(res: ProjResolution, n: int) -> Counter:
    """dim Ext^n(S, T) per target simple T, read off the summands."""
    return res.summand_multiset(n)


def generated_subalgebra_dims(resolutions: dict[str, ProjResolution],
                              max_gen_degree: int, n_max: int) -> dict[int, int]:
    """Total dimension, per degree up to ``n_max``, of the subalgebra of the
    cohomology ring generated by classes of degree at most ``max_gen_degree``."""
    spans = _closure_spans(resolutions, max_gen_degree, n_max)
    return {d: len(spans[d]) for d in range(1, n_max + 1)}


def full_ext_dims(resolutions: dict[str, ProjResolution], n_max: int) -> dict[int, int]:
    return {
        d: sum(len(res.summands[d]) for res in resolutions.values())
        for d in range(1, n_max + 1)
    }


def element_in_span(resolutions: dict[str, ProjResolution], elem: ExtElement,
                    max_gen_degree: int) -> bool:
    """Is the class in the subalgebra generated below ``max_gen_degree``?"""
    la = elem.res.la
    f = la.field
    d = elem.degree
    spans = _closure_spans(resolutions, max_gen_degree, d)
    reducer = linalg.SparseReducer(f)
    for x in spans[d]:
        reducer.add({(x.source, i): c for i, c in x.coeffs.items()})
    return reducer.contains({(elem.source, i): c for i, c in elem.coeffs.items()})


def _closure_spans(resolutions, max_gen_degree, n_max):
    la = next(iter(resolutions.values())).la
    f = la.field
    spans: dict[int, list[ExtElement]] = {}
    for d in range(1, n_max + 1):
        reducer = linalg.SparseReducer(f)
        spans[d] = []
        if d <= max_gen_degree:
            candidates = []
            for s, res in resolutions.items():
                for i in range(len(res.summands[d])):
                    candidates.append(ExtElement(res, d, {i: f.one}))
        else:
            candidates = []
            for a in range(1, d):
                b = d - a
                for x in spans[a]:
                    for t in x.targets():
                        xt = x.restrict_to_target(t)
                        for y in spans[b]:
                            if y.source != t:
                                continue
                            candidates.append(yoneda_multiply(y, xt, resolutions))
        for cand in candidates:
            key = {(cand.source, i): c for i, c in cand.coeffs.items()
                   if not f.is_zero(c)}
            if reducer.add(key):
                spans[d].append(cand)
    return spans
