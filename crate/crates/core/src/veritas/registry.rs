//! Every checkable claim with its stable id, statement and checker.

use regex::Regex;

use super::checks::{ag, dg, ops, ring};
use super::context::{ReflCtx, SpaceCtx};
use super::hom::HomPart;
use super::{Outcome, Tier, VeritasError};
use crate::SpaceClass;

/// Where a failure counts against the run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Guaranteed on every space.
    All,
    /// Guaranteed on discrete spaces, explored elsewhere.
    Discrete,
    /// Never guaranteed.
    Explore,
}

impl Scope {
    pub fn tier(self, class: &SpaceClass) -> Tier {
        match self {
            Scope::All => Tier::Guaranteed,
            Scope::Discrete if class.is_discrete => Tier::Guaranteed,
            _ => Tier::Explore,
        }
    }

    pub fn is_guaranteed_somewhere(self) -> bool {
        self != Scope::Explore
    }
}

/// Which graph a witness lists edges of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Ag,
    Dg,
    None,
}

#[derive(Clone, Copy)]
pub enum Check {
    /// Depends only on the number of weak components.
    Reflection(fn(&ReflCtx) -> Outcome),
    /// Depends on the topology.
    Space(fn(&SpaceCtx) -> Outcome),
    /// Evaluated on graph-map probes and seeded trials, not on spaces.
    Hom(HomPart),
}

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
    pub graph: GraphKind,
    /// Existence claims pass with an example or are not applicable.
    pub existential: bool,
    pub check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("scope", &self.scope).finish()
    }
}

const fn refl(id: &'static str, scope: Scope, statement: &'static str, f: fn(&ReflCtx) -> Outcome) -> Claim {
    Claim {
        id,
        statement,
        scope,
        graph: GraphKind::Ag,
        existential: false,
        check: Check::Reflection(f),
    }
}

const fn ringc(id: &'static str, statement: &'static str, f: fn(&ReflCtx) -> Outcome) -> Claim {
    Claim {
        id,
        statement,
        scope: Scope::All,
        graph: GraphKind::None,
        existential: false,
        check: Check::Reflection(f),
    }
}

const fn space(id: &'static str, scope: Scope, statement: &'static str, f: fn(&SpaceCtx) -> Outcome) -> Claim {
    Claim {
        id,
        statement,
        scope,
        graph: GraphKind::None,
        existential: false,
        check: Check::Space(f),
    }
}

const fn dgc(id: &'static str, scope: Scope, statement: &'static str, f: fn(&SpaceCtx) -> Outcome) -> Claim {
    Claim {
        id,
        statement,
        scope,
        graph: GraphKind::Dg,
        existential: false,
        check: Check::Space(f),
    }
}

const fn hom(id: &'static str, scope: Scope, statement: &'static str, part: HomPart) -> Claim {
    Claim {
        id,
        statement,
        scope,
        graph: GraphKind::None,
        existential: false,
        check: Check::Hom(part),
    }
}

const fn exists(mut c: Claim) -> Claim {
    c.existential = true;
    c
}

use Scope::{All, Discrete, Explore};

static CLAIMS: &[Claim] = &[
    // graph-level facts about AG(X); X is the discrete reflection
    refl("prop.two.equiv", All, "|X| = 2 iff diam AG(X) = 1 iff clique AG(X) = 2 iff AG(X) is bipartite with two nonempty parts iff AG(X) is complete bipartite with two nonempty parts", ag::two_point_equivalences),
    refl("prop.diam3", All, "|X| >= 3 iff diam AG(X) = 3", ag::diameter_three),
    refl("prop.chi.clique", All, "chi AG(X) = clique AG(X)", ag::chi_equals_clique),
    refl("prop.finite.equiv", All, "for finite X with m points, AG(X) is finite with 2^m - 2 vertices and C(X) has 2^m ideals", ag::finiteness),
    refl("lem.distance.a", All, "d(I,J) = 1 iff O(I) and O(J) are disjoint", ag::distance_a),
    refl("lem.distance.b", All, "d(I,J) = 2 iff O(I) meets O(J) and cl(O(I) u O(J)) != X", ag::distance_b),
    refl("lem.distance.c", All, "d(I,J) = 3 iff O(I) meets O(J) and cl(O(I) u O(J)) = X", ag::distance_c),
    refl("prop.ecc.a", All, "ecc(I) = 3 iff O(I) is not a singleton", ag::ecc_a),
    refl("prop.ecc.b", All, "ecc(I) = 2 iff O(I) is a singleton and |X| > 2", ag::ecc_b),
    refl("prop.ecc.c", All, "ecc(I) = 1 iff O(I) is a singleton and |X| = 2", ag::ecc_c),
    refl("cor.star", All, "|X| = 2 iff AG(X) is a star", ag::star),
    refl("thm.radius", All, "Rad AG(X) is 1 if |X| = 2, 2 if |X| > 2 and X has an isolated point, 3 if |X| > 2 and X has no isolated point", ag::radius),
    refl("prop.leaf", All, "I is a leaf iff X \\ cl O(I) is a singleton", ag::leaf),
    refl("lem.gi.a", All, "for non-leaf I, J: O(I), O(J) disjoint with cl(O(I) u O(J)) != X iff gi(I,J) = 3", ag::gi_a),
    refl("lem.gi.b", All, "for non-leaf I, J: O(I), O(J) disjoint with cl(O(I) u O(J)) = X implies gi(I,J) = 4", ag::gi_b),
    refl("lem.gi.c", All, "for non-leaf I, J: O(I) meets O(J) and cl O(I) = cl O(J) implies gi(I,J) = 4", ag::gi_c),
    refl("lem.gi.d", All, "for non-leaf I, J with O(I) meeting O(J) and cl O(I) != cl O(J): X \\ cl(O(I) u O(J)) is not a singleton iff gi(I,J) = 4", ag::gi_d),
    refl("lem.gi.e", All, "for non-leaf I, J: O(I) meets O(J), cl O(I) != cl O(J) and X \\ cl(O(I) u O(J)) is a singleton iff gi(I,J) = 5", ag::gi_e),
    refl("lem.gi.d.repaired", All, "for non-leaf I, J with O(I) meeting O(J) and cl O(I) != cl O(J): gi(I,J) is 5 if X \\ cl(O(I) u O(J)) is a singleton, 6 if it is empty, 4 otherwise", ag::gi_repaired),
    refl("thm.girth", All, "girth AG(X) = 3 if |X| > 2, and AG(X) has no cycle if |X| = 2", ag::girth),
    refl("thm.triangulated", All, "X has an isolated point iff AG(X) has a leaf iff AG(X) is not triangulated", ag::triangulated),
    refl("thm.dt.bounds", All, "c(X) <= dt AG(X) <= w(X)", ag::dt_bounds),
    refl("thm.dt.bounds.repaired", All, "c(X) <= dt AG(X) <= w(X) when |X| >= 3, and dt AG(X) = 1 when |X| = 2", ag::dt_bounds_repaired),
    refl("cor.discrete.dt", All, "X discrete implies dt AG(X) = |X|", ag::dt_discrete),
    refl("cor.discrete.dt.repaired", All, "X discrete implies dt AG(X) = |X| when |X| >= 3, and dt AG(X) = 1 when |X| = 2", ag::dt_discrete_repaired),
    refl("thm.dt.finite", All, "dt AG(X) is finite iff X is finite, and then dt AG(X) = |X|", ag::dt_finite),
    refl("thm.chi.clique.c", All, "chi AG(X) = clique AG(X) = c(X)", ag::chi_clique_cellularity),
    refl("ag.complemented", All, "AG(X) is complemented", ag::complemented),
    refl("cor.orthogonal", All, "I and J are orthogonal iff O(I), O(J) are disjoint and cl(O(I) u O(J)) = X", ag::orthogonality),
    refl("prop.O.sum.adjacency", All, "K is adjacent to the ideal with support O(I) u O(J) iff K is adjacent to both I and J", ag::sum_adjacency),
    // ring-level identities in F3^m
    ringc("lem.order.a", "S subset of T implies O(S) subset of O(T)", ring::order_a),
    ringc("lem.order.c", "O(S) is empty iff S = {0}", ring::order_c),
    ringc("lem.order.d", "O(S) = X iff the ideal generated by S is free", ring::order_d),
    ringc("lem.order.g", "O(<f>) = Coz(f)", ring::order_g),
    ringc("prop.generated", "O(<S>) = O(S)", ring::generated),
    ringc("prop.O.sum.a", "O(I + J) = O(I) u O(J)", ring::sum_support),
    ringc("prop.O.cap.b", "O(I n J) is a subset of O(I) n O(J)", ring::cap_subset),
    Claim { scope: Explore, ..exists(ringc("prop.O.cap.b.strict", "some S1, S2 have O(S1 n S2) strictly smaller than O(S1) n O(S2)", ring::cap_strict)) },
    ringc("prop.O.cap.d", "O(I n J) = O(I) n O(J)", ring::cap_equal),
    ringc("prop.OI.a", "O(I(U)) = int(X \\ U)", ring::o_of_i),
    ringc("prop.OI.b", "I(O(I)) = Ann(I)", ring::i_of_o_is_ann),
    ringc("prop.OI.d", "O(Ann(I)) = int(X \\ O(I))", ring::o_of_ann),
    ringc("lem.open.image", "every open set of X is O(I) for some ideal I", ring::open_image),
    ringc("thm.IJ.a", "IJ = 0 iff O(I) n O(J) is empty", ring::product_zero),
    ringc("cor.elementAG.a", "a nonzero ideal I has nonzero annihilator iff cl O(I) != X", ring::element_of_a),
    // operator identities on the topology, with ring forms where available
    space("lem.order.b", All, "U subset of V implies I(V) subset of I(U)", ops::order_b),
    space("lem.order.e", All, "I(U) = 0 iff U is dense", ops::order_e),
    space("lem.order.f", All, "I(U) = C(X) iff U is empty", ops::order_f),
    space("lem.order.h", All, "I(U) = I(cl U)", ops::order_h),
    space("prop.I.cup.c", All, "I(U u V) = I(U) n I(V)", ops::union_to_intersection),
    space("prop.I.cap.e", All, "I(U n V) contains I(U) + I(V)", ops::intersection_contains_sum),
    exists(space("prop.I.cap.e.strict", Explore, "some U, V have I(U n V) strictly larger than I(U) + I(V)", ops::intersection_strict)),
    space("cor.dense.union", All, "U u V is dense iff I(U) n I(V) = 0 iff I(U) I(V) = 0", ops::dense_union),
    space("prop.OI.c", All, "(IO)^3 = IO, equivalently Ann applied three times equals Ann", ops::ann_cubed),
    space("thm.IJ.b", All, "I Ann(J) = 0 iff O(I) is a subset of cl O(J)", ops::ij_b),
    space("thm.IJ.c", All, "Ann(I) Ann(J) = 0 iff cl(O(I) u O(J)) = X", ops::ij_c),
    space("thm.IJ.d", All, "cl O(I) = cl O(J) iff Ann(I) = Ann(J)", ops::ij_d),
    space("thm.IJ.e", All, "I(U) I = 0 iff O(I) is a subset of cl U", ops::ij_e),
    space("cor.elementAG.b", All, "I(U) is a nonzero ideal with nonzero annihilator iff cl U != X and int(cl U) is nonempty", ops::element_b),
    space("cor.elementAG.b.literal", Explore, "I(U) is a nonzero ideal with nonzero annihilator iff int(cl U) is nonempty", ops::element_b_literal),
    // the disjoint open set graph DG(X) of the topology itself
    dgc("def.dg.coincide", Discrete, "DG(X) equals AG(X) with each ideal drawn as its support", dg::coincide),
    dgc("dg.thm.a", Discrete, "diam DG(X) is 1 if |X| = 2 and 3 if |X| > 2", dg::diameter),
    dgc("dg.thm.b", Discrete, "|X| = 2 iff DG(X) is a star", dg::star),
    dgc("dg.thm.c", Discrete, "Rad DG(X) is 1 if |X| = 2, 2 if |X| > 2 and X has an isolated point, 3 if |X| > 2 and X has no isolated point", dg::radius),
    dgc("dg.thm.d", Discrete, "girth DG(X) = 3 if |X| > 2, and DG(X) has no cycle if |X| = 2", dg::girth),
    dgc("dg.thm.e", Discrete, "chi DG(X) = clique DG(X) = c(X)", dg::chi_clique_cellularity),
    dgc("dg.thm.f", Explore, "c(X) <= dt DG(X) <= w(X)", dg::dt_bounds),
    dgc("dg.thm.g", Discrete, "DG(X) is complemented", dg::complemented),
    // an edge-reflecting surjection from G onto G'
    hom("hom.a", Explore, "diam G' = diam G", HomPart::Diameter),
    hom("hom.b", Explore, "Rad G' = Rad G", HomPart::Radius),
    hom("hom.c", Explore, "girth G' <= girth G", HomPart::Girth),
    hom("hom.d", All, "dt G' <= dt G", HomPart::Dominating),
    hom("hom.e", All, "clique G' = clique G", HomPart::Clique),
    hom("hom.f", All, "chi G' = chi G", HomPart::Chromatic),
    hom("hom.g", Explore, "G is complemented iff G' is complemented", HomPart::Complemented),
];

/// All claims, sorted by id.
pub fn claims() -> Vec<&'static Claim> {
    let mut all: Vec<&'static Claim> = CLAIMS.iter().collect();
    all.sort_by_key(|c| c.id);
    all
}

pub fn lookup(id: &str) -> Result<&'static Claim, VeritasError> {
    CLAIMS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VeritasError::UnknownClaim(id.to_string()))
}

fn glob(pattern: &str) -> Regex {
    let body = regex::escape(pattern).replace(r"\*", ".*");
    Regex::new(&format!("^{body}$")).expect("escaped pattern is valid")
}

/// Claims matching any of the glob patterns (`*` matches any run of
/// characters), sorted by id. A pattern matching nothing is an error.
pub fn select<S: AsRef<str>>(patterns: &[S]) -> Result<Vec<&'static Claim>, VeritasError> {
    if patterns.is_empty() {
        return Ok(claims());
    }
    let mut chosen = vec![false; CLAIMS.len()];
    for p in patterns {
        let re = glob(p.as_ref());
        let mut hit = false;
        for (i, c) in CLAIMS.iter().enumerate() {
            if re.is_match(c.id) {
                chosen[i] = true;
                hit = true;
            }
        }
        if !hit {
            return Err(VeritasError::UnknownClaim(p.as_ref().to_string()));
        }
    }
    let mut out: Vec<&'static Claim> = CLAIMS.iter().zip(chosen).filter(|(_, k)| *k).map(|(c, _)| c).collect();
    out.sort_by_key(|c| c.id);
    Ok(out)
}

fn scope_note(c: &Claim) -> &'static str {
    match (c.check, c.scope) {
        (_, Scope::Explore) => "explore",
        (Check::Hom(_), _) => "guaranteed",
        (_, Scope::All) => "guaranteed on every space",
        (_, Scope::Discrete) => "guaranteed on discrete spaces, explore elsewhere",
    }
}

fn subject_note(c: &Claim) -> &'static str {
    match (c.check, c.graph) {
        (Check::Hom(_), _) => "probes and seeded twin expansions",
        (_, GraphKind::Ag) => "AG of the discrete reflection",
        (_, GraphKind::Dg) => "DG of the space itself",
        (Check::Reflection(_), GraphKind::None) => "ring model of the reflection",
        (Check::Space(_), GraphKind::None) => "operators on the space, plus the ring model",
    }
}

/// The claim catalogue as Markdown, grouped by id prefix.
pub fn claims_markdown() -> String {
    let mut out = String::from("# Claims\n\nGenerated by `annigraph claims --markdown`; do not edit by hand.\n\n");
    out.push_str("`O(I)` is the support of an ideal, `I(U)` the ideal of functions vanishing on `U`, ");
    out.push_str("`cl` and `int` closure and interior, `c(X)` cellularity, `w(X)` weight, `dt` the dominating number. ");
    out.push_str("In graph-map claims, `G` maps onto `G'` by an edge-reflecting surjection.\n\n");
    for c in claims() {
        let kind = if c.existential { ", existence" } else { "" };
        out.push_str(&format!(
            "- `{}` ({}; {}{}): {}\n",
            c.id,
            scope_note(c),
            subject_note(c),
            kind,
            c.statement
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: Vec<&str> = claims().iter().map(|c| c.id).collect();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
    }

    #[test]
    fn catalogue_matches_docs() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/claims.md");
        let docs = std::fs::read_to_string(path).unwrap_or_default();
        assert!(
            docs == claims_markdown(),
            "docs/claims.md is stale; regenerate with `annigraph claims --markdown > docs/claims.md`"
        );
    }

    #[test]
    fn globs() {
        let gi = select(&["lem.gi.*"]).unwrap();
        assert_eq!(gi.len(), 6);
        assert_eq!(select(&["thm.radius"]).unwrap().len(), 1);
        assert_eq!(select(&["nope.*"]).unwrap_err(), VeritasError::UnknownClaim("nope.*".into()));
        assert!(select(&["dg.*", "def.dg.*"]).unwrap().len() == 8);
        assert_eq!(lookup("hom.c").unwrap().id, "hom.c");
    }
}
