//! MAX2SAT(3) reduced to EDK_4 and EDK_5.
//!
//! Each variable x_i with m_i occurrences gets a gadget `R_i`: a ring of m_i
//! blocks whose K_r's alternate between an "even" and an "odd" family, so
//! that the edge-intersection graph of `R_i` is one even cycle. Taking every
//! even clique encodes x_i = true, every odd clique x_i = false.
//!
//! Each clause gets a small gadget with one K_r `P` per literal; the two
//! `P`s of a clause share an edge, so at most one is packed. A literal's `P`
//! is glued to its occurrence block along an edge that lies in exactly one
//! gadget clique, of the parity that makes the literal false.
//!
//! Block layout (j is the occurrence, j + 1 cyclic):
//!
//! K4, vertices a b c d e h u v w y:
//!   even {a b u v} {c v d w} {d e h y}
//!   odd  {a b c v} {d w e y} {h_j a_j+1 y_j u_j+1}
//!   clause {s1 t1 s2 w} {s1 s2 t2 w}; positive literal b=s c=t, negative e=s h=t
//!
//! K5, vertices a b c d e h u v:
//!   even {b c e h v} {d h a_j+1 e_j+1 u_j+1}
//!   odd  {a b e u v} {c d h v u_j+1}
//!   clause {s1 t1 w1 w2 w3} {s2 t2 w2 w3 w4}; positive a=s b=t, negative b=s c=t
//!
//! A unit clause keeps only its first `P`; vertices used by no remaining
//! clique are not created.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clique::{Clique, Mode};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::packing::Packing;
use crate::sat::{count_satisfied, Assignment, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdkKind {
    K4,
    K5,
}

impl EdkKind {
    pub fn r(self) -> usize {
        match self {
            EdkKind::K4 => 4,
            EdkKind::K5 => 5,
        }
    }

    /// Cliques of one parity per occurrence block.
    pub fn per_occurrence(self) -> usize {
        match self {
            EdkKind::K4 => 3,
            EdkKind::K5 => 2,
        }
    }

    pub fn max_degree(self) -> usize {
        match self {
            EdkKind::K4 => 7,
            EdkKind::K5 => 9,
        }
    }

    fn block(self) -> &'static [&'static str] {
        match self {
            EdkKind::K4 => &["a", "b", "c", "d", "e", "h", "u", "v", "w", "y"],
            EdkKind::K5 => &["a", "b", "c", "d", "e", "h", "u", "v"],
        }
    }

    /// Even and odd cliques of block j as (name, next-block?) pairs.
    fn parity_cliques(self) -> (CliqueTemplates, CliqueTemplates) {
        let here = |n: &'static str| (n, false);
        let next = |n: &'static str| (n, true);
        match self {
            EdkKind::K4 => (
                vec![
                    vec![here("a"), here("b"), here("u"), here("v")],
                    vec![here("c"), here("v"), here("d"), here("w")],
                    vec![here("d"), here("e"), here("h"), here("y")],
                ],
                vec![
                    vec![here("a"), here("b"), here("c"), here("v")],
                    vec![here("d"), here("w"), here("e"), here("y")],
                    vec![here("h"), next("a"), here("y"), next("u")],
                ],
            ),
            EdkKind::K5 => (
                vec![
                    vec![here("b"), here("c"), here("e"), here("h"), here("v")],
                    vec![here("d"), next("a"), here("h"), next("e"), next("u")],
                ],
                vec![
                    vec![here("a"), here("b"), here("e"), here("u"), here("v")],
                    vec![here("c"), here("d"), here("h"), here("v"), next("u")],
                ],
            ),
        }
    }

    /// Block vertices glued to (s, t) for a literal of the given sign.
    fn glue(self, positive: bool) -> (&'static str, &'static str) {
        match (self, positive) {
            (EdkKind::K4, true) => ("b", "c"),
            (EdkKind::K4, false) => ("e", "h"),
            (EdkKind::K5, true) => ("a", "b"),
            (EdkKind::K5, false) => ("b", "c"),
        }
    }

    /// Clause gadget vertex names and its `P` cliques, for 2 or 1 literals.
    fn clause_gadget(self, literals: usize) -> (Vec<&'static str>, Vec<Vec<&'static str>>) {
        match (self, literals) {
            (EdkKind::K4, 2) => (
                vec!["s1", "t1", "s2", "t2", "w"],
                vec![vec!["s1", "t1", "s2", "w"], vec!["s1", "s2", "t2", "w"]],
            ),
            (EdkKind::K4, _) => (
                vec!["s1", "t1", "s2", "w"],
                vec![vec!["s1", "t1", "s2", "w"]],
            ),
            (EdkKind::K5, 2) => (
                vec!["s1", "t1", "s2", "t2", "w1", "w2", "w3", "w4"],
                vec![
                    vec!["s1", "t1", "w1", "w2", "w3"],
                    vec!["s2", "t2", "w2", "w3", "w4"],
                ],
            ),
            (EdkKind::K5, _) => (
                vec!["s1", "t1", "w1", "w2", "w3"],
                vec![vec!["s1", "t1", "w1", "w2", "w3"]],
            ),
        }
    }
}

/// Clique templates of one block: vertex names, each flagged when it lives
/// in the next block.
type CliqueTemplates = Vec<Vec<(&'static str, bool)>>;

impl fmt::Display for EdkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edk{}", self.r())
    }
}

/// The `P` clique of one clause literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseClique {
    pub clause: usize,
    /// Literal position within the clause, 0 or 1.
    pub position: usize,
    pub variable: usize,
    pub positive: bool,
    /// Which occurrence of the variable (0-based) this literal is.
    pub occurrence: usize,
    pub clique: Clique,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Even { var: usize },
    Odd { var: usize },
    Clause(usize),
}

#[derive(Debug, Clone)]
pub struct EdkReduction {
    pub kind: EdkKind,
    pub source: Formula,
    pub target: Graph,
    pub even: Vec<Vec<Clique>>,
    pub odd: Vec<Vec<Clique>>,
    pub clause_cliques: Vec<ClauseClique>,
    roles: HashMap<Clique, Role>,
}

impl EdkReduction {
    pub fn new(kind: EdkKind, phi: &Formula) -> Result<Self> {
        phi.check_reduction_ready()?;
        for (ci, c) in phi.clauses().iter().enumerate() {
            if c.len() == 2 && c[0].var == c[1].var {
                return Err(Error::Formula(format!(
                    "clause {} uses x{} twice; each clause needs distinct variables",
                    ci + 1,
                    c[0].var + 1
                )));
            }
        }
        let occ = phi.occurrences();
        let block = kind.block();
        let width = block.len();
        let slot = |name: &str| {
            block
                .iter()
                .position(|&b| b == name)
                .expect("known block vertex")
        };

        let mut base = Vec::with_capacity(occ.len());
        let mut labels = Vec::new();
        for (i, &m) in occ.iter().enumerate() {
            base.push(labels.len());
            for j in 0..m {
                labels.extend(block.iter().map(|b| format!("{b}(x{},{})", i + 1, j + 1)));
            }
        }
        let vertex = |i: usize, j: usize, name: &str| base[i] + (j % occ[i]) * width + slot(name);

        let (evens, odds) = kind.parity_cliques();
        let mut even = vec![Vec::new(); occ.len()];
        let mut odd = vec![Vec::new(); occ.len()];
        let mut pre_cliques: Vec<Vec<VertexId>> = Vec::new();
        for (i, &m) in occ.iter().enumerate() {
            for j in 0..m {
                for (shapes, out) in [(&evens, &mut even[i]), (&odds, &mut odd[i])] {
                    for shape in shapes {
                        let vs: Vec<VertexId> = shape
                            .iter()
                            .map(|&(n, nxt)| vertex(i, j + usize::from(nxt), n))
                            .collect();
                        out.push(Clique::new(vs.clone()));
                        pre_cliques.push(vs);
                    }
                }
            }
        }

        // Clause gadgets after all variable vertices, then glue.
        let mut seen = vec![0usize; occ.len()];
        let mut pairs = Vec::new();
        let mut pending = Vec::new();
        for (ci, clause) in phi.clauses().iter().enumerate() {
            let (names, ps) = kind.clause_gadget(clause.len());
            let start = labels.len();
            labels.extend(names.iter().map(|n| format!("{n}(C{})", ci + 1)));
            let local =
                |n: &str| start + names.iter().position(|&x| x == n).expect("clause vertex");
            for (pos, lit) in clause.iter().enumerate() {
                let j = seen[lit.var];
                seen[lit.var] += 1;
                let (gs, gt) = kind.glue(lit.positive);
                let (s, t) = if pos == 0 { ("s1", "t1") } else { ("s2", "t2") };
                pairs.push((vertex(lit.var, j, gs), local(s)));
                pairs.push((vertex(lit.var, j, gt), local(t)));
                let vs: Vec<VertexId> = ps[pos].iter().map(|n| local(n)).collect();
                pending.push((ci, pos, lit.var, lit.positive, j, vs.clone()));
                pre_cliques.push(vs);
            }
        }
        let mut pre = Graph::new(labels.len());
        for c in &pre_cliques {
            pre.add_clique(c)?;
        }
        pre.set_labels(labels)?;
        let (target, map) = pre.identify_pairs(&pairs)?;
        debug_assert!((0..base.len()).all(|i| map[base[i]] == base[i]));

        let clause_cliques: Vec<ClauseClique> = pending
            .into_iter()
            .map(
                |(clause, position, variable, positive, occurrence, vs)| ClauseClique {
                    clause,
                    position,
                    variable,
                    positive,
                    occurrence,
                    clique: Clique::new(vs.into_iter().map(|v| map[v]).collect()),
                },
            )
            .collect();

        let mut roles = HashMap::new();
        for (var, list) in even.iter().enumerate() {
            for c in list {
                roles.insert(c.clone(), Role::Even { var });
            }
        }
        for (var, list) in odd.iter().enumerate() {
            for c in list {
                roles.insert(c.clone(), Role::Odd { var });
            }
        }
        for (k, cc) in clause_cliques.iter().enumerate() {
            roles.insert(cc.clique.clone(), Role::Clause(k));
        }
        Ok(EdkReduction {
            kind,
            source: phi.clone(),
            target,
            even,
            odd,
            clause_cliques,
            roles,
        })
    }

    pub fn r(&self) -> usize {
        self.kind.r()
    }

    /// Σ c·m_i: the size of a canonical packing with no clause cliques.
    pub fn offset(&self) -> usize {
        self.kind.per_occurrence() * self.source.occurrences().iter().sum::<usize>()
    }

    pub fn role(&self, c: &Clique) -> Option<Role> {
        self.roles.get(c).copied()
    }

    /// Every gadget and clause clique, in role order.
    pub fn all_cliques(&self) -> Vec<Clique> {
        let mut out: Vec<Clique> = self
            .even
            .iter()
            .chain(&self.odd)
            .flatten()
            .cloned()
            .collect();
        out.extend(self.clause_cliques.iter().map(|c| c.clique.clone()));
        out
    }

    /// Even list for true variables, odd list for false ones, and for every
    /// satisfied clause the `P` of its first true literal.
    pub fn assignment_to_packing(&self, f: &Assignment) -> Result<Packing> {
        if f.len() != self.source.variable_count() {
            return Err(Error::InvalidArgument(format!(
                "assignment has {} values for {} variables",
                f.len(),
                self.source.variable_count()
            )));
        }
        let mut cliques = Vec::new();
        for i in 0..f.len() {
            let list = if f.get(i) {
                &self.even[i]
            } else {
                &self.odd[i]
            };
            cliques.extend(list.iter().cloned());
        }
        let mut done = vec![false; self.source.clause_count()];
        for cc in &self.clause_cliques {
            if !done[cc.clause] && f.get(cc.variable) == cc.positive {
                done[cc.clause] = true;
                cliques.push(cc.clique.clone());
            }
        }
        Packing::from_cliques(self.r(), Mode::Edge, cliques)
    }

    fn check_packing(&self, t: &Packing) -> Result<()> {
        if t.r() != self.r() {
            return Err(Error::InvalidPacking(format!(
                "packing of K_{} for a K_{} target",
                t.r(),
                self.r()
            )));
        }
        // Re-check edge-disjointness whatever mode the packing was built in.
        Packing::new(&self.target, self.r(), Mode::Edge, t.cliques().to_vec())?;
        Ok(())
    }

    /// Every variable gadget holds exactly its full even or full odd list.
    pub fn is_canonical(&self, t: &Packing) -> bool {
        (0..self.even.len()).all(|i| {
            let ev = self.even[i].iter().filter(|c| t.contains(c)).count();
            let od = self.odd[i].iter().filter(|c| t.contains(c)).count();
            (ev == self.even[i].len() && od == 0) || (od == self.odd[i].len() && ev == 0)
        })
    }

    /// Repairs every non-canonical variable gadget without shrinking the
    /// packing: of the variable's packed `P`s, the sign with fewer (at most
    /// one, as m_i ≤ 3) is dropped and the parity compatible with the rest
    /// is installed in full. A gadget ring of 2k cliques holds at most k − 1
    /// of them unless it is canonical, so this never loses cliques.
    pub fn canonicalize(&self, t: &Packing) -> Result<Packing> {
        self.check_packing(t)?;
        let mut roles = Vec::with_capacity(t.len());
        for c in t.cliques() {
            match self.roles.get(c) {
                Some(&role) => roles.push(role),
                None => {
                    return Err(Error::Corrupt(format!(
                        "{c} is neither a gadget nor a clause clique"
                    )))
                }
            }
        }
        let mut keep: Vec<bool> = vec![true; t.len()];
        let mut install: Vec<&Clique> = Vec::new();
        for i in 0..self.even.len() {
            let mut ev = 0;
            let mut od = 0;
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for (k, role) in roles.iter().enumerate() {
                match *role {
                    Role::Even { var } if var == i => ev += 1,
                    Role::Odd { var } if var == i => od += 1,
                    Role::Clause(x) if self.clause_cliques[x].variable == i => {
                        if self.clause_cliques[x].positive {
                            pos.push(k)
                        } else {
                            neg.push(k)
                        }
                    }
                    _ => {}
                }
            }
            let full = self.even[i].len();
            if (ev == full && od == 0) || (od == full && ev == 0) {
                continue;
            }
            // Positive P's clash with the odd list, negative ones with the even.
            let make_true = match pos.len().cmp(&neg.len()) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => ev >= od,
            };
            let drop = if make_true { &neg } else { &pos };
            for &k in drop {
                keep[k] = false;
            }
            for (k, role) in roles.iter().enumerate() {
                if matches!(*role, Role::Even { var } | Role::Odd { var } if var == i) {
                    keep[k] = false;
                }
            }
            install.extend(if make_true {
                &self.even[i]
            } else {
                &self.odd[i]
            });
        }
        let mut cliques: Vec<Clique> = t
            .cliques()
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(c, _)| c.clone())
            .collect();
        cliques.extend(install.into_iter().cloned());
        let out = Packing::from_cliques(self.r(), Mode::Edge, cliques)?;
        debug_assert!(out.len() >= t.len());
        Ok(out)
    }

    /// Canonicalizes, then sets x_i true iff the full even list is packed.
    pub fn packing_to_assignment(&self, t: &Packing) -> Result<Assignment> {
        let canon = self.canonicalize(t)?;
        Ok(Assignment(
            self.even
                .iter()
                .map(|list| list.iter().all(|c| canon.contains(c)))
                .collect(),
        ))
    }

    /// Clauses satisfied by the assignment read off `t`.
    pub fn recovered_value(&self, t: &Packing) -> Result<usize> {
        Ok(count_satisfied(
            &self.source,
            &self.packing_to_assignment(t)?,
        ))
    }
}
