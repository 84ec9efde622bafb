//! Orbit posets for `P\G/Q` and `P\G/Q⁻`, their open filtrations, the root
//! datum of the geometric lemma, and the poset-level comparison of the two
//! filtrations on the Jacquet module side.
//!
//! Orbits are identified with their labels in `W_{S,T}`. Indices into the
//! enumeration `u_1, ..., u_r` are 0-based in the API and 1-based in output.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hasse;
use crate::parabolic::DoubleCosetTable;
use crate::root_system::{Root, SimpleSubset};
use crate::weyl::{ElemId, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// Orbits `P u Q`.
    Q,
    /// Orbits `P u Q⁻`.
    QMinus,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "plus" => Ok(Side::Q),
            "minus" | "qminus" | "q-" => Ok(Side::QMinus),
            other => Err(Error::config(format!("unknown side {other:?} (expected plus or minus)"))),
        }
    }
}

/// Closure order and open filtration on one side.
#[derive(Debug, Clone)]
pub struct OrbitPoset {
    table: DoubleCosetTable,
    side: Side,
    /// `closure[u]` holds every `v` whose orbit lies in the closure of `u`'s.
    closure: Vec<FixedBitSet>,
    opens: Vec<Vec<usize>>,
}

impl OrbitPoset {
    /// On side `Q`, `v` is in the closure of `u` iff `v <= u`. On side `Q⁻`
    /// the relation is pulled back through `Ω_{S,T}` from the side-`Q` order
    /// of `(S, θ(T))`: `v` is in the closure of `u` iff `Ω(v) <= Ω(u)`.
    pub fn build(group: &WeylGroup, s: SimpleSubset, t: SimpleSubset, side: Side) -> Result<Self> {
        let table = DoubleCosetTable::build(group, s, t)?;
        let r = table.len();
        let labels: &[ElemId] = match side {
            Side::Q => table.reps(),
            Side::QMinus => table.omega(),
        };
        let closure = (0..r)
            .map(|u| {
                let mut row = FixedBitSet::with_capacity(r);
                for v in 0..r {
                    if group.bruhat_leq(labels[v], labels[u]) {
                        row.insert(v);
                    }
                }
                row
            })
            .collect();
        let opens = (0..r)
            .map(|i| match side {
                Side::Q => (i..r).collect(),
                Side::QMinus => (0..=i).collect(),
            })
            .collect();
        Ok(OrbitPoset { table, side, closure, opens })
    }

    pub fn table(&self) -> &DoubleCosetTable {
        &self.table
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Whether orbit `v` lies in the closure of orbit `u`.
    pub fn in_closure(&self, v: usize, u: usize) -> bool {
        self.closure[u].contains(v)
    }

    /// The open set `𝒪_i` (side `Q`) or `𝒪_i⁻` (side `Q⁻`) as orbit indices.
    pub fn open(&self, i: usize) -> &[usize] {
        &self.opens[i]
    }

    pub fn opens(&self) -> &[Vec<usize>] {
        &self.opens
    }

    /// A union of orbits is open iff its complement is a union of orbit
    /// closures.
    pub fn is_open(&self, set: &[usize]) -> bool {
        let inside: BTreeSet<usize> = set.iter().copied().collect();
        (0..self.len())
            .filter(|u| !inside.contains(u))
            .all(|u| self.closure[u].ones().all(|v| !inside.contains(&v)))
    }

    /// Violations of the structural invariants; empty when all hold.
    pub fn check(&self) -> Vec<String> {
        let r = self.len();
        let mut errs = Vec::new();
        for u in 0..r {
            if !self.in_closure(u, u) {
                errs.push(format!("closure not reflexive at {}", u + 1));
            }
            for v in 0..r {
                if u != v && self.in_closure(u, v) && self.in_closure(v, u) {
                    errs.push(format!("closure not antisymmetric at ({}, {})", u + 1, v + 1));
                }
                for w in self.closure[v].ones() {
                    if self.in_closure(v, u) && !self.in_closure(w, u) {
                        errs.push(format!("closure not transitive at ({}, {}, {})", w + 1, v + 1, u + 1));
                    }
                }
            }
        }
        for (i, open) in self.opens.iter().enumerate() {
            if !self.is_open(open) {
                errs.push(format!("open set {} is not open", i + 1));
            }
            if i + 1 < r {
                let next = &self.opens[i + 1];
                let nested = match self.side {
                    Side::Q => next.len() + 1 == open.len() && next.iter().all(|x| open.contains(x)),
                    Side::QMinus => open.len() + 1 == next.len() && open.iter().all(|x| next.contains(x)),
                };
                if !nested {
                    errs.push(format!("open sets {} and {} are not nested", i + 1, i + 2));
                }
            }
        }
        errs
    }

    /// Cover relations of the closure order: `(v, u)` with `v` covered by `u`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        hasse::covers(self.len(), |v, u| self.in_closure(v, u))
    }

    pub fn to_dot(&self, group: &WeylGroup) -> String {
        let labels: Vec<String> = self
            .table
            .reps()
            .iter()
            .enumerate()
            .map(|(i, &u)| format!("u{} = {}", i + 1, group.format(u)))
            .collect();
        let side = match self.side {
            Side::Q => "Q",
            Side::QMinus => "Q-",
        };
        let name = format!("{} S={} T={} side={side}", group.cartan_type(), self.table.s(), self.table.t());
        hasse::to_dot(&name, &labels, &self.hasse_edges())
    }
}

/// One step of the filtration comparison, with 1-based orbit indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationStep {
    pub index: usize,
    /// Orbits supporting `𝒥_i^∨`, the functionals vanishing on `𝒥_{i+1}`.
    pub dual: Vec<usize>,
    /// Orbits supporting `𝒥_i⁻`, from the open set `𝒪_i⁻`.
    pub opposite: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub r: usize,
    pub steps: Vec<FiltrationStep>,
    /// (a) each `𝒥_i^∨` is supported on `{i' <= i}`, the closed complement of `𝒪_{i+1}`.
    pub dual_ok: bool,
    /// (b) each `𝒥_i⁻` is supported on `{i' <= i}` and `𝒪_i⁻` is open.
    pub opposite_ok: bool,
    /// (c) `u ↦ Ω(u)` is an order isomorphism from the `Q⁻` closure order
    /// of `(S,T)` onto the `Q` closure order of `(S,θ(T))`.
    pub omega_iso_ok: bool,
    /// The two routes to the `Q⁻` closure order (transposed Bruhat order and
    /// the `Ω` pullback) agree.
    pub closure_routes_ok: bool,
    pub failures: Vec<String>,
}

impl MatchReport {
    pub fn passed(&self) -> bool {
        self.dual_ok && self.opposite_ok && self.omega_iso_ok && self.closure_routes_ok
    }
}

/// Compares the dual of the geometric-lemma filtration with the filtration
/// coming from `P\G/Q⁻`, at the level of supporting orbit sets.
pub fn dual_filtration_match(group: &WeylGroup, s: SimpleSubset, t: SimpleSubset) -> Result<MatchReport> {
    let plus = OrbitPoset::build(group, s, t, Side::Q)?;
    let minus = OrbitPoset::build(group, s, t, Side::QMinus)?;
    let table = plus.table();
    let r = table.len();
    let reps = table.reps();
    let mut failures = Vec::new();

    let mut steps = Vec::with_capacity(r);
    let mut dual_ok = true;
    let mut opposite_ok = true;
    for i in 0..r {
        let expected: Vec<usize> = (0..=i).collect();

        // 𝒥_i^∨ annihilates 𝒥_{i+1}, which is supported on 𝒪_{i+1}.
        let dual: Vec<usize> = if i + 1 < r {
            (0..r).filter(|x| !plus.open(i + 1).contains(x)).collect()
        } else {
            (0..r).collect()
        };
        if dual != expected || (i + 1 < r && !plus.is_open(plus.open(i + 1))) {
            dual_ok = false;
            failures.push(format!("dual step {} supported on {:?}", i + 1, one_based(&dual)));
        }

        let opposite = minus.open(i).to_vec();
        if opposite != expected || !minus.is_open(&opposite) {
            opposite_ok = false;
            failures.push(format!("opposite step {} supported on {:?}", i + 1, one_based(&opposite)));
        }
        steps.push(FiltrationStep {
            index: i + 1,
            dual: one_based(&dual),
            opposite: one_based(&opposite),
        });
    }
    for err in plus.check().into_iter().chain(minus.check()) {
        failures.push(err);
    }
    dual_ok &= plus.check().is_empty();
    opposite_ok &= minus.check().is_empty();

    // Q⁻ closure straight from the closure statement: v in closure(u) iff u <= v.
    let mut closure_routes_ok = true;
    for u in 0..r {
        for v in 0..r {
            if minus.in_closure(v, u) != group.bruhat_leq(reps[u], reps[v]) {
                closure_routes_ok = false;
                failures.push(format!("Q- closure routes disagree at ({}, {})", v + 1, u + 1));
            }
        }
    }

    let theta_t = table.theta_t();
    let target = OrbitPoset::build(group, s, theta_t, Side::Q)?;
    let mut omega_iso_ok = true;
    let positions: Vec<Option<usize>> = table.omega().iter().map(|&o| target.table().position(o)).collect();
    let hit: BTreeSet<usize> = positions.iter().flatten().copied().collect();
    if positions.iter().any(Option::is_none) || hit.len() != r || target.len() != r {
        omega_iso_ok = false;
        failures.push("Ω is not a bijection onto W_{S,θ(T)}".to_string());
    } else {
        for u in 0..r {
            for v in 0..r {
                let lhs = group.bruhat_leq(reps[u], reps[v]);
                let rhs = target.in_closure(positions[v].unwrap(), positions[u].unwrap());
                if lhs != rhs {
                    omega_iso_ok = false;
                    failures.push(format!("Ω fails to match closures at ({}, {})", v + 1, u + 1));
                }
            }
        }
    }

    Ok(MatchReport {
        s: s.labels(),
        t: t.labels(),
        r,
        steps,
        dual_ok,
        opposite_ok,
        omega_iso_ok,
        closure_routes_ok,
        failures,
    })
}

fn one_based(ix: &[usize]) -> Vec<usize> {
    ix.iter().map(|i| i + 1).collect()
}

/// Root-level data of the geometric lemma at a double-coset representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeomLemmaDatum {
    pub w: ElemId,
    /// Roots of `U_Q`: `R⁺_nd \ R_{nd,T}`.
    pub roots_uq: Vec<Root>,
    /// Roots of `U^w = U_Q ∩ w⁻¹ U⁻ w`: those `α` of `U_Q` with `w(α) < 0`.
    pub roots_uw: Vec<Root>,
    /// Roots of `P ∩ w U_Q w⁻¹`: `(R⁺_nd ∪ R_{nd,S}) ∩ w(R⁺_nd \ R_{nd,T})`.
    pub roots_p_cap: Vec<Root>,
}

impl GeomLemmaDatum {
    /// Roots of `U_Q` that `w` keeps positive.
    pub fn positive_part(&self, group: &WeylGroup) -> Vec<Root> {
        self.roots_uq
            .iter()
            .copied()
            .filter(|a| group.act(self.w, a).is_positive())
            .collect()
    }

    /// Violations of the datum invariants; empty when all hold.
    pub fn check(&self, group: &WeylGroup) -> Vec<String> {
        let mut errs = Vec::new();
        if let Some(a) = self.roots_uw.iter().find(|a| !self.roots_uq.contains(a)) {
            errs.push(format!("{a:?} in U^w but not in U_Q"));
        }
        let w_inv = group.inv(self.w);
        for b in &self.roots_p_cap {
            let pre = group.act(w_inv, b);
            if self.roots_uw.contains(&pre) {
                errs.push(format!("{pre:?} lies in U^w and in w⁻¹(P ∩ wU_Qw⁻¹)"));
            }
        }
        let pos = self.positive_part(group).len();
        if self.roots_uw.len() + pos != self.roots_uq.len() {
            errs.push(format!(
                "positivity split {} + {} != {}",
                self.roots_uw.len(),
                pos,
                self.roots_uq.len()
            ));
        }
        errs
    }
}

pub fn geometric_lemma_datum(
    group: &WeylGroup,
    w: ElemId,
    s: SimpleSubset,
    t: SimpleSubset,
) -> Result<GeomLemmaDatum> {
    if !group.is_min_double_rep(w, s, t) {
        return Err(Error::domain(format!(
            "{} is not a minimal representative of W({s})\\W/W({t})",
            group.format(w)
        )));
    }
    let rs = group.root_system();
    let roots_uq: Vec<Root> = rs
        .positive_nondivisible()
        .iter()
        .copied()
        .filter(|a| !a.supported_in(t))
        .collect();
    let roots_uw = roots_uq
        .iter()
        .copied()
        .filter(|a| group.act(w, a).is_negative())
        .collect();
    let roots_p_cap = roots_uq
        .iter()
        .map(|a| group.act(w, a))
        .filter(|b| b.is_positive() || b.supported_in(s))
        .collect();
    Ok(GeomLemmaDatum { w, roots_uq, roots_uw, roots_p_cap })
}
