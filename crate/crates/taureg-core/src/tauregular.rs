//! The headline procedures: deciding tau-regularity through presentations of
//! maximal rank, generically tau-regular components and their g-vector
//! parametrization, reduction along A/AeA, generic extension and quotient by
//! a simple projective, classification over triangular algebras, the pair
//! bijection with tau-minus-regular pairs, and the search for modules
//! witnessing an asymmetry between the tau and tau-minus theories.

use crate::algebra::Algebra;
use crate::classify::triangular_order;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::presentations::{decompose_presentation, generic_rank, ProjectivePair};
use crate::quotient::{quotient_by_idempotent, QuotientData};
use crate::rep::{
    cokernel_rep, dual_rep, ext1, hom_dim, inj_dim_at_most, inj_summand_multiplicities,
    is_isomorphic, minimal_projective_presentation, proj_dim_at_most, proj_summand_multiplicities,
    rad_power, socle, tau, tau_minus, ProjSum, Representation,
};
use crate::sampler::Sampler;
use std::collections::BTreeSet;
use std::sync::Arc;

/// A module is tau-regular exactly when its minimal projective presentation
/// has maximal rank among all morphisms between the same projectives. The
/// sampled generic rank is a certified lower bound, so `false` answers carry
/// the usual probabilistic caveat while `true` answers are exact.
pub fn is_tau_regular(m: &Representation, sampler: &mut Sampler) -> Result<bool> {
    let pres = minimal_projective_presentation(m)?;
    let rank = pres.map.rank();
    let pair = ProjectivePair::new(m.algebra(), pres.p1, pres.p0);
    let (r, _) = generic_rank(&pair, sampler)?;
    if rank > r {
        return Err(Error::InternalInconsistency(
            "sampled generic rank fell below the rank of a minimal presentation".into(),
        ));
    }
    Ok(rank == r)
}

/// Dual test: tau-minus-regularity of M is tau-regularity of DM over the
/// opposite algebra.
pub fn is_tau_minus_regular(m: &Representation, sampler: &mut Sampler) -> Result<bool> {
    let op = m.algebra().opposite();
    is_tau_regular(&dual_rep(m, &op), sampler)
}

/// A generically tau-regular component, recorded through the minimal
/// projective presentation of its generic module: gvec = [p1] - [p0], and
/// p1, p0 never share an indecomposable summand. e_value = E(witness), which
/// for these components also equals the codimension invariant c.
#[derive(Clone, Debug)]
pub struct ComponentDescriptor {
    pub p1: ProjSum,
    pub p0: ProjSum,
    pub gvec: Vec<i64>,
    pub dimvec: Vec<usize>,
    pub generic_witness: Representation,
    pub e_value: usize,
}

impl ComponentDescriptor {
    pub fn algebra(&self) -> &Arc<Algebra> {
        self.generic_witness.algebra()
    }

    /// Equality of components inside the g-vector parametrization.
    pub fn same_component(&self, other: &ComponentDescriptor) -> bool {
        self.gvec == other.gvec
    }
}

/// A component together with a projective multiplicity vector whose support
/// avoids the support of the component; these pairs are what g-vectors
/// parametrize.
#[derive(Clone, Debug)]
pub struct TauRegularPair {
    pub component: ComponentDescriptor,
    pub proj: ProjSum,
}

/// The closure of {0}.
pub fn zero_component(algebra: &Arc<Algebra>) -> ComponentDescriptor {
    let n = algebra.num_vertices();
    ComponentDescriptor {
        p1: ProjSum::zero(n),
        p0: ProjSum::zero(n),
        gvec: vec![0; n],
        dimvec: vec![0; n],
        generic_witness: Representation::zero(algebra),
        e_value: 0,
    }
}

/// Descriptor of the component in which `m` is generic. Asserts that `m` is
/// tau-regular and that its minimal presentation has add-disjoint terms;
/// callers only pass modules that are generic by construction, so failures
/// are internal inconsistencies.
pub fn descriptor_of_module(
    m: &Representation,
    sampler: &mut Sampler,
) -> Result<ComponentDescriptor> {
    let alg = m.algebra().clone();
    let pres = minimal_projective_presentation(m)?;
    let rank = pres.map.rank();
    let (r, _) = generic_rank(
        &ProjectivePair::new(&alg, pres.p1.clone(), pres.p0.clone()),
        sampler,
    )?;
    if rank > r {
        return Err(Error::InternalInconsistency(
            "sampled generic rank fell below the rank of a minimal presentation".into(),
        ));
    }
    if rank != r {
        return Err(Error::InternalInconsistency(
            "witness module is not tau-regular".into(),
        ));
    }
    for v in 0..alg.num_vertices() {
        if pres.p1.mults[v] != 0 && pres.p0.mults[v] != 0 {
            return Err(Error::InternalInconsistency(format!(
                "minimal presentation of a generic witness shares P({}) on both sides",
                v + 1
            )));
        }
    }
    let gvec = pres
        .p1
        .mults
        .iter()
        .zip(&pres.p0.mults)
        .map(|(a, b)| *a as i64 - *b as i64)
        .collect();
    let e_value = hom_dim(m, &tau(m)?);
    Ok(ComponentDescriptor {
        p1: pres.p1,
        p0: pres.p0,
        gvec,
        dimvec: m.dims().to_vec(),
        generic_witness: m.clone(),
        e_value,
    })
}

/// Component of the generic cokernel of Hom(P1, P0) for an add-disjoint pair,
/// together with the projective residue killed by the generic morphism.
pub fn component_from_pair(
    algebra: &Arc<Algebra>,
    p1: ProjSum,
    p0: ProjSum,
    sampler: &mut Sampler,
) -> Result<TauRegularPair> {
    for v in 0..algebra.num_vertices() {
        if p1.mults[v] != 0 && p0.mults[v] != 0 {
            return Err(Error::Invalid(format!(
                "pair shares P({}) on both sides; components require add-disjoint pairs",
                v + 1
            )));
        }
    }
    let pair = ProjectivePair::new(algebra, p1, p0);
    let (_, w) = generic_rank(&pair, sampler)?;
    let parts = decompose_presentation(algebra, &pair.p1, &pair.p0, &w.morphism)?;
    if !parts.identity.is_zero() {
        return Err(Error::InternalInconsistency(
            "generic morphism of an add-disjoint pair contains an identity summand".into(),
        ));
    }
    for v in 0..algebra.num_vertices() {
        if parts.killed.mults[v] != 0 && parts.cokernel.dims()[v] != 0 {
            return Err(Error::InternalInconsistency(
                "killed projective part meets the support of the generic cokernel".into(),
            ));
        }
    }
    let component = descriptor_of_module(&parts.cokernel, sampler)?;
    if component.p1 != parts.min_p1 || component.p0 != parts.min_p0 {
        return Err(Error::InternalInconsistency(
            "minimal presentation disagrees with the decomposition of the generic sample".into(),
        ));
    }
    Ok(TauRegularPair {
        component,
        proj: parts.killed,
    })
}

/// The pair parametrized by an arbitrary g-vector z: split z into its
/// positive part P1 and negative part P0, then z = gvec + [proj] with the
/// support of proj disjoint from the support of the component.
pub fn component_from_gvector(
    algebra: &Arc<Algebra>,
    z: &[i64],
    sampler: &mut Sampler,
) -> Result<TauRegularPair> {
    let n = algebra.num_vertices();
    if z.len() != n {
        return Err(Error::Invalid(format!(
            "g-vector has {} entries, expected {n}",
            z.len()
        )));
    }
    let p1 = ProjSum {
        mults: z.iter().map(|&g| g.max(0) as usize).collect(),
    };
    let p0 = ProjSum {
        mults: z.iter().map(|&g| (-g).max(0) as usize).collect(),
    };
    let pair = component_from_pair(algebra, p1, p0, sampler)?;
    for v in 0..n {
        if pair.component.gvec[v] + pair.proj.mults[v] as i64 != z[v] {
            return Err(Error::InternalInconsistency(
                "g-vector does not split as component g-vector plus projective residue".into(),
            ));
        }
    }
    Ok(pair)
}

/// Extend a module over the quotient A/AeA to the module over A that is zero
/// on the removed vertices.
pub fn extend_by_zero(
    q: &QuotientData,
    big: &Arc<Algebra>,
    m: &Representation,
) -> Result<Representation> {
    let n = big.num_vertices();
    let fp = big.fp();
    let dims: Vec<usize> = (1..=n)
        .map(|v| q.new_vertex(v).map_or(0, |w| m.dim_at(w)))
        .collect();
    let arrows = big
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arr)| match q.arrow_map[a] {
            Some(a2) => m.arrow(a2).clone(),
            None => Matrix::zeros(dims[arr.target - 1], dims[arr.source - 1], fp),
        })
        .collect();
    Representation::new(big.clone(), dims, arrows)
        .map_err(|e| Error::InternalInconsistency(format!("zero extension is not a module: {e}")))
}

/// Restrict a module over A with support away from the removed vertices to a
/// module over the quotient A/AeA.
pub fn restrict_to_quotient(q: &QuotientData, m: &Representation) -> Result<Representation> {
    let big = m.algebra();
    for v in 1..=big.num_vertices() {
        if q.new_vertex(v).is_none() && m.dim_at(v) != 0 {
            return Err(Error::Invalid(format!(
                "module is supported on removed vertex {v}"
            )));
        }
    }
    let dims: Vec<usize> = q.kept.iter().map(|&v| m.dim_at(v)).collect();
    let mut arrows: Vec<Option<Matrix>> = vec![None; q.algebra.quiver().arrows.len()];
    for (a, slot) in q.arrow_map.iter().enumerate() {
        if let Some(a2) = *slot {
            arrows[a2] = Some(m.arrow(a).clone());
        }
    }
    let arrows = arrows
        .into_iter()
        .map(|x| x.expect("surjective arrow map"))
        .collect();
    Representation::new(q.algebra.clone(), dims, arrows)
        .map_err(|e| Error::InternalInconsistency(format!("restriction is not a module: {e}")))
}

/// Cross-checks reduction: a module supported away from the removed vertices
/// is tau-regular over A exactly when it is tau-regular over A/AeA.
/// Returns both verdicts; disagreement is an internal inconsistency.
pub fn reduction_check(
    algebra: &Arc<Algebra>,
    removed: &BTreeSet<usize>,
    m: &Representation,
    sampler: &mut Sampler,
) -> Result<(bool, bool)> {
    let q = quotient_by_idempotent(algebra, removed)?;
    let mb = restrict_to_quotient(&q, m)?;
    let over_a = is_tau_regular(m, sampler)?;
    let over_b = is_tau_regular(&mb, sampler)?;
    if over_a != over_b {
        return Err(Error::InternalInconsistency(format!(
            "reduction transport failed: tau-regular over A = {over_a}, over A/AeA = {over_b}"
        )));
    }
    Ok((over_a, over_b))
}

/// Vertices whose simple module is projective, i.e. the sinks of the quiver.
pub fn simple_projective_vertices(algebra: &Arc<Algebra>) -> Vec<usize> {
    let q = algebra.quiver();
    (1..=algebra.num_vertices())
        .filter(|&v| q.arrows.iter().all(|a| a.source != v))
        .collect()
}

fn require_simple_projective(algebra: &Arc<Algebra>, i: usize) -> Result<()> {
    if i == 0 || i > algebra.num_vertices() {
        return Err(Error::Invalid(format!("vertex {i} out of range")));
    }
    if algebra.quiver().arrows.iter().any(|a| a.source == i) {
        return Err(Error::NotSimpleProjective(i));
    }
    Ok(())
}

/// Generic extension by the simple projective S(i): the component presented
/// by P1 -> P0 + S(i). The g-vector drops by the i-th unit vector and the
/// dimension vector gains it.
pub fn generic_ext_simple_proj(
    z: &ComponentDescriptor,
    i: usize,
    sampler: &mut Sampler,
) -> Result<ComponentDescriptor> {
    let alg = z.algebra().clone();
    require_simple_projective(&alg, i)?;
    let n = alg.num_vertices();
    let p0 = z.p0.plus(&ProjSum::single(n, i));
    let pair = ProjectivePair::new(&alg, z.p1.clone(), p0);
    let (_, w) = generic_rank(&pair, sampler)?;
    let parts = decompose_presentation(&alg, &pair.p1, &pair.p0, &w.morphism)?;
    let ext = descriptor_of_module(&parts.cokernel, sampler)?;
    let gvec_ok = (0..n).all(|v| ext.gvec[v] == z.gvec[v] - i64::from(v + 1 == i));
    let dim_ok = (0..n).all(|v| ext.dimvec[v] == z.dimvec[v] + usize::from(v + 1 == i));
    if !gvec_ok || !dim_ok {
        return Err(Error::InternalInconsistency(format!(
            "generic extension by S({i}) broke the g-vector or dimension bookkeeping"
        )));
    }
    Ok(ext)
}

/// Generic quotient by the simple projective S(i); inverse to the generic
/// extension. Requires the composition multiplicity [Z : S(i)] >= 1, i.e.
/// support of the dimension vector at i, and asserts the rank gain
/// r(P1 + S, P0) = r(P1, P0) + 1.
pub fn generic_quot_simple_proj(
    z: &ComponentDescriptor,
    i: usize,
    sampler: &mut Sampler,
) -> Result<ComponentDescriptor> {
    let alg = z.algebra().clone();
    require_simple_projective(&alg, i)?;
    if z.dimvec[i - 1] == 0 {
        return Err(Error::SimpleNotInSupport(i));
    }
    let n = alg.num_vertices();
    let (r0, _) = generic_rank(
        &ProjectivePair::new(&alg, z.p1.clone(), z.p0.clone()),
        sampler,
    )?;
    let p1 = z.p1.plus(&ProjSum::single(n, i));
    let pair = ProjectivePair::new(&alg, p1, z.p0.clone());
    let (r1, w) = generic_rank(&pair, sampler)?;
    if r1 != r0 + 1 {
        return Err(Error::InternalInconsistency(format!(
            "generic quotient by S({i}): rank gained {} instead of 1",
            r1 as i64 - r0 as i64
        )));
    }
    let parts = decompose_presentation(&alg, &pair.p1, &pair.p0, &w.morphism)?;
    let quot = descriptor_of_module(&parts.cokernel, sampler)?;
    let gvec_ok = (0..n).all(|v| quot.gvec[v] == z.gvec[v] + i64::from(v + 1 == i));
    let dim_ok = (0..n).all(|v| quot.dimvec[v] + usize::from(v + 1 == i) == z.dimvec[v]);
    if !gvec_ok || !dim_ok {
        return Err(Error::InternalInconsistency(format!(
            "generic quotient by S({i}) broke the g-vector or dimension bookkeeping"
        )));
    }
    Ok(quot)
}

/// The unique generically tau-regular component with dimension vector d over
/// a triangular algebra, built by iterated generic extensions over the chain
/// of vertex-removal quotients: working from the source end, each stage
/// restores one sink and extends by its simple d-many times.
pub fn triangular_unique_component(
    algebra: &Arc<Algebra>,
    d: &[usize],
    sampler: &mut Sampler,
) -> Result<ComponentDescriptor> {
    let n = algebra.num_vertices();
    if d.len() != n {
        return Err(Error::Invalid(format!(
            "dimension vector has {} entries, expected {n}",
            d.len()
        )));
    }
    let order = triangular_order(algebra.presentation()).ok_or(Error::NotTriangular)?;

    // prev carries the component over the previous (smaller) quotient.
    let mut prev: Option<(ComponentDescriptor, QuotientData)> = None;
    for k in (1..n).rev() {
        let removed: BTreeSet<usize> = order[..k].iter().copied().collect();
        let q = quotient_by_idempotent(algebra, &removed)?;
        let mut comp = match prev {
            None => zero_component(&q.algebra),
            Some((c, pq)) => {
                let lifted = extend_by_zero(&pq, algebra, &c.generic_witness)?;
                descriptor_of_module(&restrict_to_quotient(&q, &lifted)?, sampler)?
            }
        };
        let v = q.new_vertex(order[k]).expect("kept vertex");
        for _ in 0..d[order[k] - 1] {
            comp = generic_ext_simple_proj(&comp, v, sampler)?;
        }
        // Support processed so far must match d on the kept vertices.
        for (w, &orig) in q.kept.iter().enumerate() {
            if comp.dimvec[w] != d[orig - 1] {
                return Err(Error::InternalInconsistency(
                    "intermediate component has the wrong dimension vector".into(),
                ));
            }
        }
        prev = Some((comp, q));
    }
    let mut comp = match prev {
        None => zero_component(algebra),
        Some((c, pq)) => {
            descriptor_of_module(&extend_by_zero(&pq, algebra, &c.generic_witness)?, sampler)?
        }
    };
    for _ in 0..d[order[0] - 1] {
        comp = generic_ext_simple_proj(&comp, order[0], sampler)?;
    }
    // Fresh generic sample of the final pair over A itself.
    let fresh = component_from_pair(algebra, comp.p1.clone(), comp.p0.clone(), sampler)?;
    if !fresh.proj.is_zero() || fresh.component.gvec != comp.gvec || fresh.component.dimvec != *d {
        return Err(Error::InternalInconsistency(
            "resampled component disagrees with the extension chain".into(),
        ));
    }
    Ok(fresh.component)
}

/// Hereditary test: every simple has projective dimension at most 1.
pub fn hereditary_check(algebra: &Arc<Algebra>) -> Result<bool> {
    for i in 1..=algebra.num_vertices() {
        if !proj_dim_at_most(&Representation::simple(algebra, i), 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// 1-Iwanaga-Gorenstein test: pd I(i) <= 1 and injdim P(i) <= 1 for all i.
pub fn ig1_check(algebra: &Arc<Algebra>) -> Result<bool> {
    for i in 1..=algebra.num_vertices() {
        if !proj_dim_at_most(&Representation::injective(algebra, i), 1)? {
            return Ok(false);
        }
        if !inj_dim_at_most(&Representation::projective(algebra, i), 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Necessary condition for the tau/tau-minus theories to agree: A/AeA is
/// 1-Iwanaga-Gorenstein for every idempotent e, i.e. over every vertex
/// subset's removal (including removing nothing).
pub fn ig1_all_quotients(algebra: &Arc<Algebra>) -> Result<bool> {
    let n = algebra.num_vertices();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == n {
            continue;
        }
        let removed: BTreeSet<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        let ok = if removed.is_empty() {
            ig1_check(algebra)?
        } else {
            ig1_check(&quotient_by_idempotent(algebra, &removed)?.algebra)?
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The other side of the pair bijection: a tau-minus-regular witness with an
/// injective multiplicity vector whose support avoids the witness.
#[derive(Clone, Debug)]
pub struct TauMinusPair {
    pub witness: Representation,
    pub inj: ProjSum,
    pub e_minus_value: usize,
}

/// The bijection from tau-regular pairs to tau-minus-regular pairs:
/// (Z, P) maps to (closure of tau(Z) + orbit of nu(P), nu(P_Z)) where P_Z is
/// the maximal projective summand of the generic witness and nu sends P(i)
/// to I(i).
pub fn sigma_pair_bijection(pair: &TauRegularPair, sampler: &mut Sampler) -> Result<TauMinusPair> {
    let alg = pair.component.algebra().clone();
    let m = &pair.component.generic_witness;
    // tau kills projective summands, so no explicit stripping is needed.
    let tau_m = tau(m)?;
    let nu_p = pair.proj.inj_rep(&alg);
    let witness = Representation::direct_sum(&alg, &[&tau_m, &nu_p]);
    let inj = ProjSum {
        mults: proj_summand_multiplicities(m),
    };
    if !is_tau_minus_regular(&witness, sampler)? {
        return Err(Error::InternalInconsistency(
            "pair bijection produced a witness that is not tau-minus-regular".into(),
        ));
    }
    if hom_dim(&witness, &inj.inj_rep(&alg)) != 0 {
        return Err(Error::InternalInconsistency(
            "pair bijection produced an injective part meeting the witness support".into(),
        ));
    }
    let e_minus_value = hom_dim(&tau_minus(&witness)?, &witness);
    Ok(TauMinusPair {
        witness,
        inj,
        e_minus_value,
    })
}

/// Inverse bijection: (Z', I) maps back through tau-minus and nu-inverse,
/// I(i) to P(i).
pub fn sigma_pair_inverse(pair: &TauMinusPair, sampler: &mut Sampler) -> Result<TauRegularPair> {
    let alg = pair.witness.algebra().clone();
    let tm = tau_minus(&pair.witness)?;
    let nu_inv = pair.inj.rep(&alg);
    let witness = Representation::direct_sum(&alg, &[&tm, &nu_inv]);
    let proj = ProjSum {
        mults: inj_summand_multiplicities(&pair.witness),
    };
    if hom_dim(&proj.rep(&alg), &witness) != 0 {
        return Err(Error::InternalInconsistency(
            "inverse pair bijection produced a projective part meeting the witness support".into(),
        ));
    }
    let component = descriptor_of_module(&witness, sampler)?;
    Ok(TauRegularPair { component, proj })
}

/// A module certifying that the tau and tau-minus theories differ: rigid,
/// with exactly one of E and E-minus zero.
#[derive(Clone, Debug)]
pub struct AsymmetryWitness {
    pub module: Representation,
    pub name: String,
    pub e_value: usize,
    pub e_minus_value: usize,
}

/// Standard candidate pool: projectives, injectives, simples, radicals of
/// projectives, and projectives modulo socle.
pub fn default_pool(algebra: &Arc<Algebra>) -> Result<Vec<(String, Representation)>> {
    let n = algebra.num_vertices();
    let mut pool = Vec::new();
    for i in 1..=n {
        pool.push((format!("P({i})"), Representation::projective(algebra, i)));
    }
    for i in 1..=n {
        pool.push((format!("I({i})"), Representation::injective(algebra, i)));
    }
    for i in 1..=n {
        pool.push((format!("S({i})"), Representation::simple(algebra, i)));
    }
    for i in 1..=n {
        let p = Representation::projective(algebra, i);
        pool.push((format!("rad P({i})"), rad_power(&p, 1)?.0));
    }
    for i in 1..=n {
        let p = Representation::projective(algebra, i);
        let (_, incl) = socle(&p)?;
        pool.push((format!("P({i})/soc"), cokernel_rep(&incl)?.0));
    }
    Ok(pool)
}

/// All quotients P(i)/rad^l P(i); over a Nakayama algebra these are exactly
/// the indecomposables.
pub fn interval_pool(algebra: &Arc<Algebra>) -> Result<Vec<(String, Representation)>> {
    let mut pool = Vec::new();
    for i in 1..=algebra.num_vertices() {
        let p = Representation::projective(algebra, i);
        for l in 1..=algebra.loewy_length() {
            let (rad, incl) = rad_power(&p, l)?;
            let m = cokernel_rep(&incl)?.0;
            let name = if rad.is_zero() {
                format!("P({i})")
            } else {
                format!("P({i})/rad^{l}")
            };
            let stop = rad.is_zero();
            pool.push((name, m));
            if stop {
                break;
            }
        }
    }
    Ok(pool)
}

/// Default pool followed by the interval modules.
pub fn standard_pool(algebra: &Arc<Algebra>) -> Result<Vec<(String, Representation)>> {
    let mut pool = default_pool(algebra)?;
    pool.extend(interval_pool(algebra)?);
    Ok(pool)
}

/// Search direct sums of at most `max_summands` pool modules for a rigid
/// module with E = 0 < E-minus or E-minus = 0 < E. A hit certifies that the
/// sets of generically tau-regular and tau-minus-regular components differ;
/// absence of a hit proves nothing by itself.
pub fn witness_search(
    algebra: &Arc<Algebra>,
    max_summands: usize,
    pool: &[(String, Representation)],
    sampler: &mut Sampler,
) -> Result<Option<AsymmetryWitness>> {
    // Deduplicate up to isomorphism, keeping first occurrences in order.
    let mut names: Vec<&str> = Vec::new();
    let mut mods: Vec<&Representation> = Vec::new();
    for (name, m) in pool {
        if m.is_zero() || mods.iter().any(|&x| is_isomorphic(x, m, sampler)) {
            continue;
        }
        names.push(name);
        mods.push(m);
    }
    let k = mods.len();
    let taus: Vec<Representation> = mods.iter().map(|&m| tau(m)).collect::<Result<_>>()?;
    let taums: Vec<Representation> = mods.iter().map(|&m| tau_minus(m)).collect::<Result<_>>()?;
    // t_plus[i][j] = hom(X_i, tau X_j), t_minus[i][j] = hom(tau-minus X_i, X_j).
    let t_plus: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| hom_dim(mods[i], &taus[j])).collect())
        .collect();
    let t_minus: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| hom_dim(&taums[i], mods[j])).collect())
        .collect();

    let mut subset: Vec<usize> = Vec::new();
    for size in 1..=max_summands.min(k) {
        subset.clear();
        subset.extend(0..size);
        loop {
            let table_sum = |table: &[Vec<usize>]| -> usize {
                subset
                    .iter()
                    .map(|&i| subset.iter().map(|&j| table[i][j]).sum::<usize>())
                    .sum()
            };
            let plus = table_sum(&t_plus);
            let minus = table_sum(&t_minus);
            if (plus == 0) != (minus == 0) {
                let parts: Vec<&Representation> = subset.iter().map(|&i| mods[i]).collect();
                let module = Representation::direct_sum(algebra, &parts);
                let name = subset
                    .iter()
                    .map(|&i| names[i])
                    .collect::<Vec<_>>()
                    .join(" + ");
                let e_value = hom_dim(&module, &tau(&module)?);
                let e_minus_value = hom_dim(&tau_minus(&module)?, &module);
                if e_value != plus || e_minus_value != minus || ext1(&module, &module)? != 0 {
                    return Err(Error::InternalInconsistency(
                        "witness tables disagree with direct computation".into(),
                    ));
                }
                return Ok(Some(AsymmetryWitness {
                    module,
                    name,
                    e_value,
                    e_minus_value,
                }));
            }
            // Next subset of the same size in lexicographic order.
            let mut pos = size;
            while pos > 0 && subset[pos - 1] == k - (size - pos) - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            subset[pos - 1] += 1;
            for q in pos..size {
                subset[q] = subset[q - 1] + 1;
            }
        }
    }
    Ok(None)
}
