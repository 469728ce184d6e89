//! The graph side of the complex machinery: the looped 1-skeleton functor,
//! its equivariant quotient form, generating cofibrations, verifiers for
//! the two unit conditions, homological chromatic lower bounds, and the
//! NDR-to-graph transfer with pushout retract checks.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{
    barycentric_subdivision, boundary_simplex, coset_copies, full_simplex, horn, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::graph::{pushout_attach, Graph, GraphHom, DEFAULT_BUDGET};
use crate::group::{endo_auto_analysis, quotient_graph, Action, FiniteGroup};
use crate::hom::{box_complex, def_retract_by_folds, def_retract_exact, HomPoset, MultiHom, RetractCertificate};
use crate::homology::{reduced_betti, DEFAULT_MAX_DIM};
use crate::poset::{strong_collapse_decide, OrbitRemoval};

/// The graph on V(K) where v and w are adjacent exactly when {v, w} is a
/// simplex. Every vertex is looped since singletons are simplices.
pub fn complex_to_graph(k: &SimplicialComplex) -> Graph {
    let labels = k.labels().to_vec();
    let mut edges: Vec<(String, String)> = Vec::new();
    for v in 0..k.vertex_count() {
        for w in v..k.vertex_count() {
            let simplex: BTreeSet<usize> = [v, w].into();
            if k.contains_idx(&simplex) {
                edges.push((labels[v].clone(), labels[w].clone()));
            }
        }
    }
    Graph::new(&labels, &edges).expect("1-skeleton is a valid graph")
}

/// The quotient of T x skeleton(K) by the diagonal action
/// g(x, v) = (x g^-1, g v), where T carries a right action and K a left
/// action of the same group.
pub fn a_t(
    k: &SimplicialComplex,
    k_action: &Action,
    t: &Graph,
    t_action: &Action,
) -> Result<Graph> {
    if k_action.group != t_action.group {
        return Err(Error::Precondition("the two actions must share one group".into()));
    }
    t_action.validate_on_graph(t)?;
    k.validate_action(k_action)?;
    let skel = complex_to_graph(k);
    let tensor = t.tensor(&skel);
    let group = t_action.group.clone();
    let mut perms = Vec::new();
    for g in 0..group.order() {
        let ginv = group.inverse(g);
        let mut perm = vec![usize::MAX; tensor.vertex_count()];
        for x in 0..t.vertex_count() {
            for v in 0..skel.vertex_count() {
                let from = tensor
                    .index_of(&format!("({},{})", t.label(x), skel.label(v)))
                    .unwrap();
                let to = tensor
                    .index_of(&format!(
                        "({},{})",
                        t.label(t_action.apply(ginv, x)),
                        skel.label(k_action.apply(g, v))
                    ))
                    .unwrap();
                perm[from] = to;
            }
        }
        perms.push(perm);
    }
    let diag = Action::new(group.clone(), crate::group::Side::Left, tensor.labels().to_vec(), perms)?;
    let all: Vec<usize> = (0..group.order()).collect();
    let (q, _) = quotient_graph(&tensor, &diag, &all)?;
    Ok(q)
}

/// Which boundary inclusion to materialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CofibrationKind {
    Boundary,
    Horn(usize),
}

/// A generating cofibration with both endpoint graphs materialized.
#[derive(Debug, Clone)]
pub struct Cofibration {
    pub domain: Graph,
    pub codomain: Graph,
    pub map: GraphHom,
}

/// The graph map obtained by applying the quotient functor to
/// Sd^k((Gamma/Gamma') x dDelta^n) -> Sd^k((Gamma/Gamma') x Delta^n),
/// or the horn inclusion instead of the boundary.
pub fn generating_cofibration(
    t: &Graph,
    t_action: &Action,
    sub: &[usize],
    k: usize,
    n: usize,
    kind: CofibrationKind,
) -> Result<Cofibration> {
    if k < 2 {
        return Err(Error::Precondition("need at least two subdivisions".into()));
    }
    let group = t_action.group.clone();
    let small = match kind {
        CofibrationKind::Boundary => boundary_simplex(n),
        CofibrationKind::Horn(r) => horn(n, r)?,
    };
    let big = full_simplex(n);
    let (dom0, dom_act) = copies_or_empty(&group, sub, &small)?;
    let (cod0, cod_act) = coset_copies(&group, sub, &big)?;
    let (dom_sd, dom_sd_act) = barycentric_subdivision(&dom0, dom_act.as_ref(), k)?;
    let (cod_sd, cod_sd_act) = barycentric_subdivision(&cod0, Some(&cod_act), k)?;
    let domain = a_t(
        &dom_sd,
        dom_sd_act
            .as_ref()
            .unwrap_or(&Action::trivial_for(group.clone(), dom_sd.labels().to_vec())),
        t,
        t_action,
    )?;
    let codomain = a_t(&cod_sd, cod_sd_act.as_ref().unwrap(), t, t_action)?;
    // vertex labels of the domain are orbit labels built from the same
    // tensor labels as in the codomain, so the map matches by label
    let assoc: BTreeMap<String, String> = domain
        .labels()
        .iter()
        .map(|l| (l.clone(), l.clone()))
        .collect();
    let map = GraphHom::from_labels(&domain, &codomain, &assoc)?;
    Ok(Cofibration { domain, codomain, map })
}

fn copies_or_empty(
    group: &FiniteGroup,
    sub: &[usize],
    k: &SimplicialComplex,
) -> Result<(SimplicialComplex, Option<Action>)> {
    if k.vertex_count() == 0 {
        return Ok((SimplicialComplex::empty(), None));
    }
    let (c, a) = coset_copies(group, sub, k)?;
    Ok((c, Some(a)))
}

// ---- condition reports ---------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Verdict {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "REFUTED")]
    Refuted,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

/// Evidence for one subgroup pair in the first unit condition.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SubgroupPairEvidence {
    /// The subgroup whose quotient graph is the target.
    pub quotient_subgroup: Vec<String>,
    /// The subgroup whose fixed points are compared.
    pub fixing_subgroup: Vec<String>,
    pub fixed_cosets: usize,
    pub fixed_components: usize,
    pub unit_bijective: bool,
    pub cores_are_points: bool,
    /// One strong-collapse certificate per fixed component, replayable
    /// against the exported Hom poset.
    pub collapse_certificates: Vec<Vec<OrbitRemoval>>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct EndoEvidence {
    pub stiff: bool,
    pub endo_count: usize,
    pub all_endos_are_autos: bool,
    pub aut_order: usize,
    pub group_order: usize,
    pub alpha_injective: bool,
    pub alpha_surjective: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ConditionReport {
    pub condition: String,
    pub verdict: Verdict,
    pub diameter: usize,
    /// Least k with 2^(k-2) strictly above the diameter.
    pub min_subdivisions: usize,
    pub pair_evidence: Vec<SubgroupPairEvidence>,
    pub endo_evidence: Option<EndoEvidence>,
    pub notes: Vec<String>,
}

fn diameter_gate(t: &Graph) -> Result<(usize, usize)> {
    let d = t.diameter()?;
    let mut k = 2usize;
    while 1usize << (k - 2) <= d {
        k += 1;
    }
    Ok((d, k))
}

fn require_connected_with_edge(t: &Graph) -> Result<()> {
    if t.vertex_count() == 0 || t.edge_count() == 0 {
        return Err(Error::Precondition("graph needs at least one edge".into()));
    }
    if t.components().len() != 1 {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    Ok(())
}

/// Verifier for the second unit condition via the stiff-graph
/// characterization: every endomorphism an automorphism, and the action
/// map an isomorphism onto the automorphism group.
pub fn check_condition_b(t: &Graph, action: &Action) -> Result<ConditionReport> {
    require_connected_with_edge(t)?;
    action.validate_on_graph(t)?;
    let (diameter, min_subdivisions) = diameter_gate(t)?;
    let stiff = crate::graph::dismantlable_vertices(t).is_empty();
    if !stiff {
        return Ok(ConditionReport {
            condition: "B".into(),
            verdict: Verdict::Inconclusive,
            diameter,
            min_subdivisions,
            pair_evidence: Vec::new(),
            endo_evidence: None,
            notes: vec![
                "graph is not stiff; the endomorphism characterization does not apply".into(),
                "fold to the core and re-run".into(),
            ],
        });
    }
    let report = endo_auto_analysis(t, DEFAULT_BUDGET)?;
    let group = &action.group;
    // alpha sends a group element to its vertex permutation
    let mut images: BTreeSet<Vec<usize>> = BTreeSet::new();
    for g in 0..group.order() {
        images.insert(action.perm(g).to_vec());
    }
    let alpha_injective = images.len() == group.order();
    let aut_order = report.aut.group.order();
    let alpha_surjective = alpha_injective && images.len() == aut_order;
    let verdict = if report.all_endos_are_autos && alpha_injective && alpha_surjective {
        Verdict::Verified
    } else {
        Verdict::Refuted
    };
    let mut notes = Vec::new();
    if !report.all_endos_are_autos {
        notes.push("an endomorphism is not an automorphism".into());
    }
    if !alpha_injective {
        notes.push("the action map is not injective".into());
    } else if !alpha_surjective {
        notes.push("the action map does not reach every automorphism".into());
    }
    Ok(ConditionReport {
        condition: "B".into(),
        verdict,
        diameter,
        min_subdivisions,
        pair_evidence: Vec::new(),
        endo_evidence: Some(EndoEvidence {
            stiff,
            endo_count: report.endo_count,
            all_endos_are_autos: report.all_endos_are_autos,
            aut_order,
            group_order: group.order(),
            alpha_injective,
            alpha_surjective,
        }),
        notes,
    })
}

/// Verifier for the first unit condition: for every pair of subgroups,
/// the cosets fixed by the second subgroup must map bijectively onto the
/// components of the fixed part of Hom(T, T / first subgroup), and each
/// component must strongly collapse to a point. Refutation comes from a
/// component count mismatch or nonzero reduced homology of a component.
pub fn check_condition_a(t: &Graph, action: &Action) -> Result<ConditionReport> {
    require_connected_with_edge(t)?;
    action.validate_on_graph(t)?;
    let (diameter, min_subdivisions) = diameter_gate(t)?;
    let group = action.group.clone();
    let subgroups = group.subgroup_lattice();
    let mut pair_evidence = Vec::new();
    let mut verdict = Verdict::Verified;
    let mut notes = Vec::new();
    for sub_q in &subgroups {
        let (quot, p) = quotient_graph(t, action, sub_q)?;
        let hp = match HomPoset::enumerate(t, &quot) {
            Ok(hp) => hp,
            Err(Error::Budget { context, limit }) => {
                notes.push(format!("budget exceeded while enumerating {context} (limit {limit})"));
                verdict = Verdict::Inconclusive;
                continue;
            }
            Err(e) => return Err(e),
        };
        let ha = hp.induced_action(action)?;
        // element index -> action point index
        let to_point: Vec<usize> = (0..hp.len())
            .map(|i| ha.point_index(&hp.element_label(i)).unwrap())
            .collect();
        let cosets = group.left_cosets(sub_q);
        // the unit: a coset with representative g maps to p . alpha_g
        let unit: Vec<usize> = cosets
            .iter()
            .map(|coset| {
                let g = coset[0];
                let map: Vec<usize> = (0..t.vertex_count()).map(|x| p.map[action.apply(g, x)]).collect();
                hp.find(&MultiHom::from_hom(&GraphHom { map })).expect("unit lands in the poset")
            })
            .collect();
        for sub_f in &subgroups {
            // cosets fixed under left translation by the fixing subgroup
            let coset_of = |x: usize| cosets.iter().position(|c| c.contains(&x)).unwrap();
            let fixed_cosets: Vec<usize> = (0..cosets.len())
                .filter(|&j| sub_f.iter().all(|&g| coset_of(group.mul(g, cosets[j][0])) == j))
                .collect();
            // poset elements fixed by the induced action
            let fixed_elems: Vec<usize> = (0..hp.len())
                .filter(|&i| sub_f.iter().all(|&g| ha.apply(g, to_point[i]) == to_point[i]))
                .collect();
            // components of the fixed subposet
            let mut comp = BTreeMap::new();
            let mut comps: Vec<Vec<usize>> = Vec::new();
            for &s in &fixed_elems {
                if comp.contains_key(&s) {
                    continue;
                }
                let id = comps.len();
                let mut stack = vec![s];
                let mut members = Vec::new();
                comp.insert(s, id);
                while let Some(i) = stack.pop() {
                    members.push(i);
                    for &j in &fixed_elems {
                        if !comp.contains_key(&j)
                            && (hp.elements[i].leq(&hp.elements[j])
                                || hp.elements[j].leq(&hp.elements[i]))
                        {
                            comp.insert(j, id);
                            stack.push(j);
                        }
                    }
                }
                members.sort();
                comps.push(members);
            }
            let unit_bijective = fixed_cosets.len() == comps.len() && {
                let hit: BTreeSet<usize> = fixed_cosets
                    .iter()
                    .filter_map(|&j| comp.get(&unit[j]).copied())
                    .collect();
                hit.len() == fixed_cosets.len() && hit.len() == comps.len()
            };
            let mut cores_are_points = true;
            let mut certificates = Vec::new();
            let mut refuted_here = false;
            let mut note = None;
            if !unit_bijective {
                refuted_here = true;
                note = Some(format!(
                    "component count mismatch: {} fixed cosets vs {} fixed components",
                    fixed_cosets.len(),
                    comps.len()
                ));
            } else {
                for members in &comps {
                    let labels: BTreeSet<String> =
                        members.iter().map(|&i| hp.element_label(i)).collect();
                    let full = hp.to_poset()?;
                    let keep: BTreeSet<usize> =
                        labels.iter().map(|l| full.index_of(l).unwrap()).collect();
                    let sub_poset = full.induced(&keep);
                    let out = strong_collapse_decide(&sub_poset, None, None)?;
                    if out.residue.len() == 1 {
                        certificates.push(out.certificate);
                    } else {
                        cores_are_points = false;
                        // homology refutes when a component is not acyclic
                        let betti = reduced_betti(&sub_poset.order_complex(), DEFAULT_MAX_DIM);
                        if betti.iter().any(|&b| b != 0) {
                            refuted_here = true;
                            note = Some(format!(
                                "a fixed component has reduced homology {betti:?}"
                            ));
                        }
                    }
                }
            }
            if refuted_here {
                verdict = Verdict::Refuted;
            } else if !cores_are_points && verdict == Verdict::Verified {
                verdict = Verdict::Inconclusive;
            }
            pair_evidence.push(SubgroupPairEvidence {
                quotient_subgroup: sub_q.iter().map(|&g| group.label(g).to_string()).collect(),
                fixing_subgroup: sub_f.iter().map(|&g| group.label(g).to_string()).collect(),
                fixed_cosets: fixed_cosets.len(),
                fixed_components: comps.len(),
                unit_bijective,
                cores_are_points,
                collapse_certificates: certificates,
                note,
            });
        }
    }
    Ok(ConditionReport {
        condition: "A".into(),
        verdict,
        diameter,
        min_subdivisions,
        pair_evidence,
        endo_evidence: None,
        notes,
    })
}

// ---- chromatic lower bound -----------------------------------------------

#[derive(Debug, Clone, serde::Serialize)]
pub struct ChromaticBound {
    pub bound: usize,
    /// Reduced Betti profile of the order complex of the box poset.
    pub betti: Vec<usize>,
    /// True when every computed Betti number vanished, so the bound is
    /// only the cap-limited estimate.
    pub capped: bool,
    pub note: String,
}

/// Homological estimate: two plus the least index with nonzero reduced
/// homology of the box poset's order complex.
pub fn chromatic_lower_bound(g: &Graph, max_dim: usize) -> Result<ChromaticBound> {
    if g.has_any_loop() {
        return Err(Error::Precondition("looped graphs have no chromatic number".into()));
    }
    let bx = box_complex(g)?;
    if bx.pairs.is_empty() {
        return Ok(ChromaticBound {
            bound: 1,
            betti: Vec::new(),
            capped: false,
            note: "no edges: box poset is empty".into(),
        });
    }
    let oc = bx.poset.order_complex();
    let betti = reduced_betti(&oc, max_dim);
    match betti.iter().position(|&b| b != 0) {
        Some(i0) => Ok(ChromaticBound {
            bound: i0 + 2,
            betti,
            capped: false,
            note: "homological estimate".into(),
        }),
        None => Ok(ChromaticBound {
            bound: max_dim + 3,
            betti,
            capped: true,
            note: format!("all reduced homology vanishes up to dimension {max_dim}; bound is the cap-limited estimate"),
        }),
    }
}

// ---- NDR transfer and pushout retracts -----------------------------------

#[derive(Debug, Clone)]
pub struct NdrTransferReport {
    pub containment_holds: bool,
    pub retract_certificate: Option<RetractCertificate>,
}

/// Checks the neighborhood containment
/// nu^r of the quotiented pair inside the quotient of nu^r, and when the
/// NDR builder succeeds, verifies by folds that the transferred
/// neighborhood retracts onto the transferred subcomplex.
pub fn ndr_transfer(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    k_action: &Action,
    t: &Graph,
    t_action: &Action,
    r: usize,
) -> Result<NdrTransferReport> {
    if !k.contains_subcomplex(l) {
        return Err(Error::Precondition("L must be a subcomplex of K".into()));
    }
    let l_action = restrict_to_sub(k_action, l.labels())?;
    let gk = a_t(k, k_action, t, t_action)?;
    let gl = a_t(l, &l_action, t, t_action)?;
    let nu_l = k.neighborhood(l, r)?;
    let nu_action = restrict_to_sub(k_action, nu_l.labels())?;
    let g_nu = a_t(&nu_l, &nu_action, t, t_action)?;
    let graph_nu = gk.neighborhood(&gl, r)?;
    let containment_holds = g_nu.contains_subgraph(&graph_nu);
    // retract side via the NDR builder on the subdivided pair
    let ndr = crate::complex::ndr_builder(k, l, Some(k_action), r)?;
    let sd_act = ndr.sd_action.as_ref().expect("action transported through subdivision");
    let a_act = restrict_to_sub(sd_act, ndr.a.labels())?;
    let ga = a_t(&ndr.a, &a_act, t, t_action)?;
    let sdl_act = restrict_to_sub(sd_act, ndr.sd_l.labels())?;
    let gsdl = a_t(&ndr.sd_l, &sdl_act, t, t_action)?;
    let target: BTreeSet<String> = gsdl.labels().iter().cloned().collect();
    let retract_certificate = def_retract_by_folds(&ga, &target)?;
    Ok(NdrTransferReport { containment_holds, retract_certificate })
}

fn restrict_to_sub(action: &Action, points: &[String]) -> Result<Action> {
    let idx: Result<Vec<usize>> = points
        .iter()
        .map(|p| {
            action
                .point_index(p)
                .ok_or_else(|| Error::Precondition(format!("point {p:?} not in the action carrier")))
        })
        .collect();
    let idx = idx?;
    let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(n, &o)| (o, n)).collect();
    let mut perms = Vec::new();
    for g in 0..action.group.order() {
        let mut perm = Vec::with_capacity(idx.len());
        for &o in &idx {
            let img = action.apply(g, o);
            let Some(&n) = pos.get(&img) else {
                return Err(Error::Precondition("subset is not stable under the action".into()));
            };
            perm.push(n);
        }
        perms.push(perm);
    }
    Action::new(action.group.clone(), action.side, points.to_vec(), perms)
}

/// Builds the pushout of Y <- H c G and decides (folds first, then exact
/// search on small graphs) whether the image of Y is a deformation
/// retract of the result.
pub fn pushout_retract_check(
    g: &Graph,
    h: &Graph,
    y: &Graph,
    f: &GraphHom,
) -> Result<(Graph, Option<RetractCertificate>)> {
    let po = pushout_attach(g, h, y, f)?;
    let target: BTreeSet<String> =
        po.from_y.image().iter().map(|&v| po.x.label(v).to_string()).collect();
    if let Some(cert) = def_retract_by_folds(&po.x, &target)? {
        return Ok((po.x, Some(cert)));
    }
    let cert = def_retract_exact(&po.x, &target)?;
    Ok((po.x, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{automorphism_action, z2_flip_on_k2};

    #[test]
    fn skeleton_of_point_is_one_loop() {
        let pt = SimplicialComplex::from_maximal(&["x"], &[vec!["x"]]).unwrap();
        let g = complex_to_graph(&pt);
        assert_eq!(g.vertex_count(), 1);
        assert!(g.has_loop(0));
    }

    #[test]
    fn skeleton_of_simplex_is_looped_complete() {
        for n in 1..=3 {
            let g = complex_to_graph(&full_simplex(n));
            assert_eq!(g.vertex_count(), n + 1);
            for v in 0..=n {
                for w in 0..=n {
                    assert!(g.has_edge(v, w));
                }
            }
        }
        // equal 1-skeletons of the boundary and the full triangle
        let a = complex_to_graph(&boundary_simplex(2));
        let b = complex_to_graph(&full_simplex(2));
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_functor_point_cases() {
        let (k2, flip) = z2_flip_on_k2();
        let z2 = flip.group.clone();
        // K = point with the trivial action: quotient of K2 by the flip
        let pt = SimplicialComplex::from_maximal(&["x"], &[vec!["x"]]).unwrap();
        let triv = Action::trivial_for(z2.clone(), vec!["x".into()]);
        let q = a_t(&pt, &triv, &k2, &flip).unwrap();
        assert_eq!(q.vertex_count(), 1);
        assert!(q.has_loop(0));
        // K = two swapped points: free action, quotient is an edge
        let two = SimplicialComplex::from_maximal(&["p", "q"], &[vec!["p"], vec!["q"]]).unwrap();
        let swap = Action::new(
            z2.clone(),
            crate::group::Side::Left,
            vec!["p".into(), "q".into()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let q = a_t(&two, &swap, &k2, &flip).unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.edge_count(), 1);
        assert!(!q.has_loop(0) && !q.has_loop(1));
    }

    #[test]
    fn trivial_group_gives_plain_tensor() {
        let t = Graph::complete(2);
        let triv_g = FiniteGroup::trivial();
        let ta = Action::trivial_for(triv_g.clone(), t.labels().to_vec());
        let k = full_simplex(1);
        let ka = Action::trivial_for(triv_g, k.labels().to_vec());
        let q = a_t(&k, &ka, &t, &ta).unwrap();
        assert_eq!(q.vertex_count(), 4);
    }

    #[test]
    fn cofibration_n0_cases() {
        let (k2, flip) = z2_flip_on_k2();
        // trivial subgroup: empty graph into (a graph isomorphic to) K2
        let c = generating_cofibration(&k2, &flip, &[0], 3, 0, CofibrationKind::Boundary).unwrap();
        assert_eq!(c.domain.vertex_count(), 0);
        assert!(crate::graph::is_isomorphic(&c.codomain, &Graph::complete(2)));
        // full subgroup: empty graph into the looped point
        let c = generating_cofibration(&k2, &flip, &[0, 1], 3, 0, CofibrationKind::Boundary).unwrap();
        assert_eq!(c.domain.vertex_count(), 0);
        assert!(crate::graph::is_isomorphic(&c.codomain, &Graph::one()));
    }

    #[test]
    fn cofibration_n1_injective_induced() {
        let (k2, flip) = z2_flip_on_k2();
        let c = generating_cofibration(&k2, &flip, &[0], 3, 1, CofibrationKind::Boundary).unwrap();
        assert!(c.map.is_injective());
        // induced image: every edge of the codomain between image vertices
        // pulls back to an edge of the domain
        let image: Vec<usize> = c.map.map.clone();
        for (i, &a) in image.iter().enumerate() {
            for (j, &b) in image.iter().enumerate() {
                assert_eq!(c.domain.has_edge(i, j), c.codomain.has_edge(a, b));
            }
        }
    }

    #[test]
    fn condition_b_examples() {
        let k3 = Graph::complete(3);
        let aut3 = automorphism_action(&k3, DEFAULT_BUDGET).unwrap();
        assert_eq!(check_condition_b(&k3, &aut3).unwrap().verdict, Verdict::Verified);
        let c5 = Graph::cycle(5);
        let aut5 = automorphism_action(&c5, DEFAULT_BUDGET).unwrap();
        let rep = check_condition_b(&c5, &aut5).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified);
        assert_eq!(rep.endo_evidence.unwrap().group_order, 10);
        // trivial group on an edge misses the flip
        let k2 = Graph::complete(2);
        let triv = Action::trivial_for(FiniteGroup::trivial(), k2.labels().to_vec());
        assert_eq!(check_condition_b(&k2, &triv).unwrap().verdict, Verdict::Refuted);
    }

    #[test]
    fn condition_b_inconclusive_on_foldable() {
        let p = Graph::path(&["a", "b", "c"]);
        let triv = Action::trivial_for(FiniteGroup::trivial(), p.labels().to_vec());
        assert_eq!(check_condition_b(&p, &triv).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn condition_a_examples() {
        let (k2, flip) = z2_flip_on_k2();
        assert_eq!(check_condition_a(&k2, &flip).unwrap().verdict, Verdict::Verified);
        let one = Graph::one();
        let triv = Action::trivial_for(FiniteGroup::trivial(), one.labels().to_vec());
        assert_eq!(check_condition_a(&one, &triv).unwrap().verdict, Verdict::Verified);
        let k3 = Graph::complete(3);
        let aut3 = automorphism_action(&k3, DEFAULT_BUDGET).unwrap();
        let rep = check_condition_a(&k3, &aut3).unwrap();
        assert_eq!(rep.verdict, Verdict::Refuted);
        // the refuting pair shows the coset/component mismatch
        assert!(rep
            .pair_evidence
            .iter()
            .any(|e| !e.unit_bijective && e.fixed_cosets != e.fixed_components));
    }

    #[test]
    fn chromatic_bounds_on_spheres() {
        assert_eq!(chromatic_lower_bound(&Graph::complete(2), 4).unwrap().bound, 2);
        assert_eq!(chromatic_lower_bound(&Graph::cycle(5), 4).unwrap().bound, 3);
        assert_eq!(chromatic_lower_bound(&Graph::complete(4), 4).unwrap().bound, 4);
        let edgeless = Graph::new(&["a", "b"], &[]).unwrap();
        assert_eq!(chromatic_lower_bound(&edgeless, 4).unwrap().bound, 1);
    }

    #[test]
    fn pushout_retract_example() {
        // path a-b-c, edge subgraph {b, c}, Y a looped point
        let g = Graph::path(&["a", "b", "c"]);
        let keep: BTreeSet<String> = ["b".to_string(), "c".to_string()].into();
        let h = g.induced_by_labels(&keep).unwrap();
        let y = Graph::one();
        let f = GraphHom { map: vec![0, 0] };
        let (x, cert) = pushout_retract_check(&g, &h, &y, &f).unwrap();
        assert_eq!(x.vertex_count(), 2);
        assert!(cert.is_some());
    }

    #[test]
    fn ndr_transfer_triangle_vertex() {
        let k = full_simplex(2);
        let l = SimplicialComplex::from_maximal(&["0"], &[vec!["0"]]).unwrap();
        let triv_g = FiniteGroup::trivial();
        let ka = Action::trivial_for(triv_g.clone(), k.labels().to_vec());
        let t = Graph::complete(2);
        let ta = Action::trivial_for(triv_g, t.labels().to_vec());
        let rep = ndr_transfer(&k, &l, &ka, &t, &ta, 2).unwrap();
        assert!(rep.containment_holds);
        assert!(rep.retract_certificate.is_some());
    }
}
