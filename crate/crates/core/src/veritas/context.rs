use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::graph::{gi, DistanceMatrix, DistanceValue, InvariantReport, UGraph, DEFAULT_GI_CAP};
use crate::ideal::ring::{Elem, Ideal, ProductField, MAX_RING_POINTS};
use crate::ideal::{build_ag_discrete, build_dg, leaf_classifier, MAX_AG_POINTS};
use crate::{PointSet, SpaceClass, Topology};

/// Computes the invariant report of a disjoint open set graph. The CLI
/// passes a caching implementation; the default is [`InvariantReport::compute`].
pub type DgReportFn<'a> = dyn Fn(&Topology, &UGraph<PointSet>) -> InvariantReport + Sync + 'a;

pub fn compute_dg_report(_: &Topology, g: &UGraph<PointSet>) -> InvariantReport {
    InvariantReport::compute(g)
}

/// The annihilating-ideal graph of `C(X)` for discrete `X` on `m` points,
/// with everything the claims read from it.
pub struct AgModel {
    pub space: Topology,
    pub graph: UGraph<PointSet>,
    pub distances: DistanceMatrix,
    pub report: InvariantReport,
    non_leaf_gi: OnceLock<Vec<(usize, usize, DistanceValue)>>,
}

impl AgModel {
    pub fn new(m: usize) -> Option<Self> {
        let graph = build_ag_discrete(m).ok()?;
        Some(AgModel {
            space: Topology::discrete(m),
            distances: DistanceMatrix::new(&graph),
            report: InvariantReport::compute(&graph),
            graph,
            non_leaf_gi: OnceLock::new(),
        })
    }

    pub fn points(&self) -> usize {
        self.space.n()
    }

    /// `gi(u, v)` by bounded cycle search for all pairs `u < v` of
    /// non-leaf vertices.
    pub fn non_leaf_gi(&self) -> &[(usize, usize, DistanceValue)] {
        self.non_leaf_gi.get_or_init(|| {
            let g = &self.graph;
            let inner: Vec<usize> = (0..g.len())
                .filter(|&v| !leaf_classifier(&self.space, g.labels()[v]).expect("vertex"))
                .collect();
            let mut out = Vec::new();
            for (i, &u) in inner.iter().enumerate() {
                for &v in &inner[i + 1..] {
                    let len = gi(g, u, v, DEFAULT_GI_CAP).expect("cycles through two vertices are short");
                    out.push((u, v, len));
                }
            }
            out
        })
    }
}

/// `F₃^m` with its ideals, their supports and annihilators listed once.
pub struct RingModel {
    pub field: ProductField,
    pub ideals: Vec<Ideal>,
    pub supports: Vec<PointSet>,
    pub anns: Vec<Ideal>,
    index: BTreeMap<Ideal, usize>,
}

impl RingModel {
    pub fn new(m: usize) -> Option<Self> {
        let field = ProductField::new(m)?;
        let ideals = field.ideals();
        let supports = ideals.iter().map(|i| field.o_of(i)).collect();
        let anns = ideals.iter().map(|i| field.ann(i)).collect();
        let index = ideals.iter().cloned().enumerate().map(|(k, i)| (i, k)).collect();
        Some(RingModel {
            field,
            ideals,
            supports,
            anns,
            index,
        })
    }

    pub fn points(&self) -> usize {
        self.field.points()
    }

    /// Position of `ideal` in [`RingModel::ideals`].
    pub fn index_of(&self, ideal: &[Elem]) -> Option<usize> {
        self.index.get(ideal).copied()
    }

    /// `IJ = 0`, checked on all pairwise products.
    pub fn products_vanish(&self, i: &[Elem], j: &[Elem]) -> bool {
        i.iter().all(|&a| j.iter().all(|&b| self.field.mul(a, b) == 0))
    }

    /// Coordinates of an element, e.g. `(1,0,2)`.
    pub fn coords(&self, f: Elem) -> String {
        let digits: Vec<String> = (0..self.points())
            .map(|i| (f / 3usize.pow(i as u32) % 3).to_string())
            .collect();
        format!("({})", digits.join(","))
    }
}

/// Models shared by every space of a run, indexed by component count.
#[derive(Default)]
pub struct SuiteCtx {
    ag: BTreeMap<usize, AgModel>,
    rings: BTreeMap<usize, RingModel>,
}

impl SuiteCtx {
    /// Precomputes models for every `m` in `ms`.
    pub fn new(ms: impl IntoIterator<Item = usize>) -> Self {
        let mut ctx = SuiteCtx::default();
        for m in ms {
            if (2..=MAX_AG_POINTS).contains(&m) && !ctx.ag.contains_key(&m) {
                if let Some(model) = AgModel::new(m) {
                    ctx.ag.insert(m, model);
                }
            }
            if m <= MAX_RING_POINTS && !ctx.rings.contains_key(&m) {
                if let Some(ring) = RingModel::new(m) {
                    ctx.rings.insert(m, ring);
                }
            }
        }
        ctx
    }

    pub fn reflection(&self, m: usize) -> ReflCtx<'_> {
        ReflCtx {
            m,
            ag: self.ag.get(&m),
            ring: self.rings.get(&m),
        }
    }
}

/// What `C(X)` sees of a space: its number of weak components.
#[derive(Clone, Copy)]
pub struct ReflCtx<'a> {
    pub m: usize,
    /// `None` when `m < 2`, where the graph is empty.
    pub ag: Option<&'a AgModel>,
    /// `None` when `m` exceeds the ring model's limit.
    pub ring: Option<&'a RingModel>,
}

/// The disjoint open set graph of one space.
pub struct DgModel {
    pub graph: UGraph<PointSet>,
    pub report: InvariantReport,
}

/// One space under test.
pub struct SpaceCtx<'a> {
    pub topology: &'a Topology,
    pub class: SpaceClass,
    pub refl: ReflCtx<'a>,
    dg: OnceLock<DgModel>,
    dg_report: &'a DgReportFn<'a>,
}

impl<'a> SpaceCtx<'a> {
    pub fn new(suite: &'a SuiteCtx, topology: &'a Topology, dg_report: &'a DgReportFn<'a>) -> Self {
        let class = topology.classify();
        SpaceCtx {
            topology,
            refl: suite.reflection(class.component_count),
            class,
            dg: OnceLock::new(),
            dg_report,
        }
    }

    pub fn dg(&self) -> &DgModel {
        self.dg.get_or_init(|| {
            let graph = build_dg(self.topology);
            let report = (self.dg_report)(self.topology, &graph);
            DgModel { graph, report }
        })
    }

    pub fn key(&self) -> String {
        self.topology.to_string()
    }
}
