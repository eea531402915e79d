//! Integer structure constants of a Chevalley basis.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use rootsys::{AlgebraType, RootSystem, Q};

/// The integers N(α, β) with [e_α, e_β] = N(α, β) e_{α+β}.
///
/// Stored densely over ordered pairs of root indices. Entries are zero
/// exactly when α + β is not a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstantTable {
    pub algebra: AlgebraType,
    n: usize,
    entries: Vec<i64>,
}

impl StructureConstantTable {
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.entries[a * self.n + b]
    }

    pub fn num_roots(&self) -> usize {
        self.n
    }

    /// Copy with a single entry replaced, leaving every related entry alone.
    pub fn with_entry(&self, a: usize, b: usize, value: i64) -> Self {
        let mut t = self.clone();
        t.entries[a * self.n + b] = value;
        t
    }

    /// Nonzero entries in root-index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.n * self.n).filter_map(move |k| {
            let v = self.entries[k];
            (v != 0).then(|| (k / self.n, k % self.n, v))
        })
    }

    pub fn max_abs(&self) -> i64 {
        self.entries.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn to_json(&self, rs: &RootSystem) -> StructureConstantsJson {
        StructureConstantsJson {
            algebra: self.algebra,
            entries: self
                .nonzero()
                .map(|(a, b, v)| NEntry {
                    alpha: rs.root(a).simple_coeffs.clone(),
                    beta: rs.root(b).simple_coeffs.clone(),
                    n: v,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NEntry {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    #[serde(rename = "N")]
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantsJson {
    pub algebra: AlgebraType,
    pub entries: Vec<NEntry>,
}

struct Builder<'a> {
    rs: &'a RootSystem,
    n: usize,
    entries: Vec<Option<i64>>,
}

impl Builder<'_> {
    fn known(&self, a: usize, b: usize) -> i64 {
        self.entries[a * self.n + b].unwrap_or_else(|| panic!("N({a},{b}) needed before it was fixed"))
    }

    fn set(&mut self, a: usize, b: usize, v: i64) {
        self.entries[a * self.n + b] = Some(v);
        self.entries[b * self.n + a] = Some(-v);
    }

    /// N(x, y) for arbitrary signs, reduced to already fixed positive pairs.
    fn value(&self, x: usize, y: usize) -> Q {
        let rs = self.rs;
        let Some(s) = rs.add(x, y) else { return Q::zero() };
        match (rs.is_positive(x), rs.is_positive(y)) {
            (true, true) => Q::from_integer(self.known(x, y) as i128),
            (false, false) => -self.value(rs.neg(x), rs.neg(y)),
            (false, true) => -self.value(y, x),
            (true, false) => {
                // x + y + z = 0 gives N(x,y)/|z|² = N(y,z)/|x|² = N(z,x)/|y|²
                let z = rs.neg(s);
                if rs.is_positive(z) {
                    rs.norm2(z) / rs.norm2(y) * self.value(z, x)
                } else {
                    rs.norm2(z) / rs.norm2(x) * self.value(y, z)
                }
            }
        }
    }
}

/// Structure constants with every extraspecial pair set to +(p+1).
///
/// Positive roots are processed in index order, which is height order. For
/// each non-simple ξ the extraspecial pair (α, ξ−α) uses the smallest α, and
/// every other positive pair summing to ξ follows from the four-root
/// relation; pairs of mixed sign come from the length-weighted cyclic
/// relation and N(−α,−β) = −N(α,β).
pub fn structure_constants(rs: &RootSystem) -> StructureConstantTable {
    let n = rs.num_roots();
    let npos = rs.num_positive();
    let mut b = Builder { rs, n, entries: vec![None; n * n] };
    for xi in 0..npos {
        let pairs: Vec<(usize, usize)> = (0..npos)
            .filter_map(|a| rs.sub(xi, a).filter(|&d| rs.is_positive(d) && a < d).map(|d| (a, d)))
            .collect();
        let Some(&(alpha, beta)) = pairs.first() else { continue };
        let (p, _) = rs.root_string(alpha, beta).expect("distinct roots");
        let n_ab = p + 1;
        b.set(alpha, beta, n_ab);
        let xi2 = rs.norm2(xi);
        let (ma, mb) = (rs.neg(alpha), rs.neg(beta));
        for &(g, d) in &pairs[1..] {
            let mut acc = Q::zero();
            if let Some(r) = rs.add(d, ma) {
                acc += b.value(d, ma) * b.value(g, mb) / rs.norm2(r);
            }
            if let Some(r) = rs.add(g, ma) {
                acc += b.value(ma, g) * b.value(d, mb) / rs.norm2(r);
            }
            let v = xi2 / Q::from_integer(n_ab as i128) * acc;
            assert!(v.is_integer() && !v.is_zero(), "non-integral structure constant {v}");
            b.set(g, d, v.to_integer() as i64);
        }
    }
    let mut entries = vec![0i64; n * n];
    for x in 0..n {
        for y in 0..n {
            if rs.add(x, y).is_some() {
                let v = b.value(x, y);
                debug_assert!(v.is_integer());
                entries[x * n + y] = v.to_integer() as i64;
            }
        }
    }
    StructureConstantTable { algebra: rs.algebra, n, entries }
}

/// Vector in the complex Chevalley basis {e_α} ∪ {h_i} with integer entries.
///
/// Indices below `num_roots` are root vectors, the rest are simple coroots.
pub type ChevalleyVec = Vec<(usize, i64)>;

fn push(v: &mut ChevalleyVec, i: usize, c: i64) {
    if c == 0 {
        return;
    }
    match v.binary_search_by_key(&i, |t| t.0) {
        Ok(p) => {
            v[p].1 += c;
            if v[p].1 == 0 {
                v.remove(p);
            }
        }
        Err(p) => v.insert(p, (i, c)),
    }
}

/// Bracket of two Chevalley basis vectors.
///
/// [h_i, e_β] = ⟨β, α_i∨⟩ e_β, [e_α, e_{−α}] = h_α as a sum of simple
/// coroots, and [e_α, e_β] = N(α, β) e_{α+β}.
pub fn chevalley_bracket(rs: &RootSystem, t: &StructureConstantTable, x: usize, y: usize) -> ChevalleyVec {
    let n = rs.num_roots();
    let mut out = ChevalleyVec::new();
    match (x < n, y < n) {
        (false, false) => {}
        (false, true) => {
            let i = x - n;
            let c = rs.pairing(y, rs.simple_root_index(i));
            push(&mut out, y, c.to_integer() as i64);
        }
        (true, false) => {
            for (k, c) in chevalley_bracket(rs, t, y, x) {
                push(&mut out, k, -c);
            }
        }
        (true, true) => {
            if rs.neg(x) == y {
                for (i, c) in rs.coroot_coeffs(x).into_iter().enumerate() {
                    push(&mut out, n + i, c.to_integer() as i64);
                }
            } else if let Some(s) = rs.add(x, y) {
                push(&mut out, s, t.get(x, y));
            }
        }
    }
    out
}

fn bracket_vec(rs: &RootSystem, t: &StructureConstantTable, u: &ChevalleyVec, w: usize) -> ChevalleyVec {
    let mut out = ChevalleyVec::new();
    for &(k, c) in u {
        for (l, d) in chevalley_bracket(rs, t, k, w) {
            push(&mut out, l, c * d);
        }
    }
    out
}

/// Outcome of an exhaustive Jacobi scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub failures: usize,
    /// First failing triple of Chevalley basis indices.
    pub witness: Option<[usize; 3]>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Check [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 for every basis triple.
pub fn verify_jacobi(rs: &RootSystem, t: &StructureConstantTable) -> JacobiReport {
    let dim = rs.num_roots() + rs.rank();
    let mut rep = JacobiReport { triples_checked: 0, failures: 0, witness: None };
    let mut single: Vec<Vec<ChevalleyVec>> = vec![Vec::new(); dim];
    for (x, row) in single.iter_mut().enumerate() {
        *row = (0..dim).map(|y| chevalley_bracket(rs, t, x, y)).collect();
    }
    for x in 0..dim {
        for y in x + 1..dim {
            for z in y + 1..dim {
                rep.triples_checked += 1;
                let mut s = bracket_vec(rs, t, &single[x][y], z);
                for (k, c) in bracket_vec(rs, t, &single[y][z], x) {
                    push(&mut s, k, c);
                }
                for (k, c) in bracket_vec(rs, t, &single[z][x], y) {
                    push(&mut s, k, c);
                }
                if !s.is_empty() {
                    rep.failures += 1;
                    rep.witness.get_or_insert([x, y, z]);
                }
            }
        }
    }
    rep
}

/// Outcome of the pairwise structure-constant identity scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub pairs_checked: usize,
    pub failures: usize,
    pub witness: Option<(usize, usize, String)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Pairwise identities of the table.
///
/// For every ordered pair with α + β = −γ a root: |N(α,β)| = p+1,
/// N(β,α) = −N(α,β), N(−α,−β) = −N(α,β) and the cyclic relation
/// N(α,β)/|γ|² = N(β,γ)/|α|² = N(γ,α)/|β|². When all roots have one
/// length the cyclic relation is the unweighted N(α,β) = N(β,γ) = N(γ,α),
/// and that form is checked too.
pub fn verify_identities(rs: &RootSystem, t: &StructureConstantTable) -> IdentityReport {
    let n = rs.num_roots();
    let simply_laced = (0..n).all(|i| rs.norm2(i) == rs.norm2(0));
    let mut rep = IdentityReport { pairs_checked: 0, failures: 0, witness: None };
    let fail = |rep: &mut IdentityReport, a: usize, b: usize, what: &str| {
        rep.failures += 1;
        if rep.witness.is_none() {
            rep.witness = Some((a, b, what.to_string()));
        }
    };
    for a in 0..n {
        for b in 0..n {
            let v = t.get(a, b);
            let Some(s) = rs.add(a, b) else {
                if v != 0 {
                    fail(&mut rep, a, b, "entry for a non-root sum");
                }
                continue;
            };
            rep.pairs_checked += 1;
            let (p, _) = rs.root_string(a, b).expect("distinct roots");
            if v.abs() != p + 1 {
                fail(&mut rep, a, b, "magnitude differs from p+1");
            }
            if t.get(b, a) != -v {
                fail(&mut rep, a, b, "not antisymmetric");
            }
            if t.get(rs.neg(a), rs.neg(b)) != -v {
                fail(&mut rep, a, b, "negation rule");
            }
            let c = rs.neg(s);
            let q = |x: usize, y: usize, w: usize| Q::from_integer(t.get(x, y) as i128) / rs.norm2(w);
            let base = q(a, b, c);
            if q(b, c, a) != base || q(c, a, b) != base {
                fail(&mut rep, a, b, "weighted cyclic relation");
            }
            if simply_laced && (t.get(b, c) != v || t.get(c, a) != v) {
                fail(&mut rep, a, b, "cyclic relation");
            }
        }
    }
    rep
}

/// Sign flip helper used by mutation checks.
pub fn flipped(t: &StructureConstantTable, a: usize, b: usize) -> StructureConstantTable {
    t.with_entry(a, b, -t.get(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn a2_magnitudes() {
        let r = rs("A2");
        let t = structure_constants(&r);
        let (a, b) = (r.simple_root_index(0), r.simple_root_index(1));
        assert_eq!(t.get(a, b).abs(), 1);
        assert_eq!(t.get(a, a), 0);
        assert!(verify_jacobi(&r, &t).passed());
    }

    #[test]
    fn g2_max_is_three() {
        let r = rs("G2");
        let t = structure_constants(&r);
        assert_eq!(t.max_abs(), 3);
        assert!(verify_jacobi(&r, &t).passed());
        assert!(verify_identities(&r, &t).passed());
    }

    #[test]
    fn a1_has_no_entries() {
        let r = rs("A1");
        let t = structure_constants(&r);
        assert_eq!(t.nonzero().count(), 0);
        assert_eq!(verify_jacobi(&r, &t).failures, 0);
    }

    #[test]
    fn single_flip_breaks_jacobi() {
        let r = rs("A2");
        let t = structure_constants(&r);
        let (a, b) = (r.simple_root_index(0), r.simple_root_index(1));
        let rep = verify_jacobi(&r, &flipped(&t, a, b));
        assert!(rep.failures > 0);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn deterministic() {
        let r = rs("F4");
        assert_eq!(structure_constants(&r), structure_constants(&r));
    }
}
