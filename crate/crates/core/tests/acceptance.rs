//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Oracles here are written independently of the library (own
//! enumeration, own relation rows, determinant-gcd invariant factors).

use std::collections::{BTreeSet, HashMap};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use burnside::abelian::{wedge_equivalent, AbelianGroup, Character};
use burnside::bng::{
    enumerate_generators, group_structure, project_symbol, BnGElement, BnGPresentation, Limits,
};
use burnside::groups::FiniteGroup;
use burnside::relations::{expand_b2, expand_prop46, relation_rows};
use burnside::symbols::{canonicalize_symbol, FieldLabel, Symbol, SymbolSum};
use burnside::zlinalg::{row_space_equal, smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

// ---------------------------------------------------------------------------
// Determinant-gcd oracle

fn det_i128(mut m: Vec<Vec<i128>>) -> i128 {
    // fraction-free Gaussian elimination
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Invariant factors `D_k / D_{k−1}` where `D_k` is the gcd of all `k×k`
/// minors.
fn minor_gcd_factors(m: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det_i128(sub));
                if g == 1 {
                    break;
                }
            }
            if g == 1 {
                break;
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// Free rank and nontrivial torsion of `ℤ^cols / rowspace(m)`.
fn oracle_cokernel(m: &[Vec<i128>], cols: usize) -> (usize, Vec<i128>) {
    let f = minor_gcd_factors(m, cols);
    (cols - f.len(), f.into_iter().filter(|&d| d != 1).collect())
}

// ---------------------------------------------------------------------------
// Brute-force B_n oracle over Z/m1 × … (elements as coordinate vectors)

struct Brute {
    orders: Vec<i64>,
    elems: Vec<Vec<i64>>,
}

impl Brute {
    fn new(orders: &[i64]) -> Self {
        let mut elems = vec![vec![]];
        for &o in orders {
            elems = elems
                .into_iter()
                .flat_map(|e| (0..o).map(move |x| [e.clone(), vec![x]].concat()))
                .collect();
        }
        Brute { orders: orders.to_vec(), elems }
    }

    fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), o)| (x - y).rem_euclid(*o)).collect()
    }

    fn generates(&self, t: &[Vec<i64>]) -> bool {
        let mut span: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; self.orders.len()]]);
        loop {
            let mut next = span.clone();
            for x in &span {
                for g in t {
                    next.insert(x.iter().zip(g).zip(&self.orders).map(|((a, b), o)| (a + b) % o).collect());
                }
            }
            if next.len() == span.len() {
                return span.len() == self.elems.len();
            }
            span = next;
        }
    }

    /// Sorted multisets of element indices that generate.
    fn generators(&self, n: usize) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            all = all
                .into_iter()
                .flat_map(|t| {
                    let lo = t.last().copied().unwrap_or(0);
                    (lo..self.elems.len()).map(move |i| [t.clone(), vec![i]].concat())
                })
                .collect();
        }
        all.into_iter()
            .filter(|t| self.generates(&t.iter().map(|&i| self.elems[i].clone()).collect::<Vec<_>>()))
            .collect()
    }

    fn index(&self, x: &[i64]) -> usize {
        self.elems.iter().position(|e| e == x).unwrap()
    }

    /// j = 2 relations on every pair of positions, written directly from
    /// `[b1,b2,…] = [b1, b2−b1, …] + [b1−b2, b2, …]` (one term if b1 = b2).
    fn relation_rows(&self, gens: &[Vec<usize>]) -> Vec<Vec<i128>> {
        let col: HashMap<&Vec<usize>, usize> = gens.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut rows = Vec::new();
        for (c, t) in gens.iter().enumerate() {
            for p in 0..t.len() {
                for q in p + 1..t.len() {
                    let (b1, b2) = (&self.elems[t[p]], &self.elems[t[q]]);
                    let rest: Vec<usize> = (0..t.len()).filter(|&k| k != p && k != q).map(|k| t[k]).collect();
                    let mut terms = vec![vec![self.index(b1), self.index(&self.sub(b2, b1))]];
                    if b1 != b2 {
                        terms.push(vec![self.index(&self.sub(b1, b2)), self.index(b2)]);
                    }
                    let mut row = vec![0i128; gens.len()];
                    row[c] += 1;
                    for mut tt in terms {
                        tt.extend(&rest);
                        tt.sort_unstable();
                        row[col[&tt]] -= 1;
                    }
                    rows.push(row);
                }
            }
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
        rows.sort();
        rows.dedup();
        rows
    }

    fn structure(&self, n: usize) -> (usize, Vec<i128>, usize) {
        let gens = self.generators(n);
        let rows = self.relation_rows(&gens);
        let (r, t) = oracle_cokernel(&rows, gens.len());
        (r, t, gens.len())
    }
}

fn phi(m: u64) -> usize {
    (1..=m).filter(|&k| k.gcd(&m) == 1).count()
}

fn as_i128(v: &[BigInt]) -> Vec<i128> {
    v.iter().map(|x| x.to_i128().unwrap()).collect()
}

fn criterion_1() -> Outcome {
    let limit = Duration::from_secs(1);
    let mut slowest = Duration::ZERO;
    for m in 1..=12u64 {
        let t = Instant::now();
        let s = group_structure(&AbelianGroup::cyclic(m), 1, &Limits::default()).map_err(|e| e.to_string())?;
        let el = t.elapsed();
        within(el, limit, &format!("B_1(Z/{m})"))?;
        slowest = slowest.max(el);
        let (r, tor, count) = Brute::new(&[m as i64]).structure(1);
        ensure(count == phi(m) && r == phi(m) && tor.is_empty(), || format!("oracle disagrees with phi({m})"))?;
        ensure(s.free_rank == phi(m) && s.torsion.is_empty(), || format!("B_1(Z/{m}) = {s:?}"))?;
    }
    for (m, rank) in [(2u64, 0usize), (3, 1)] {
        let t = Instant::now();
        let s = group_structure(&AbelianGroup::cyclic(m), 2, &Limits::default()).map_err(|e| e.to_string())?;
        let el = t.elapsed();
        within(el, limit, &format!("B_2(Z/{m})"))?;
        slowest = slowest.max(el);
        let (r, tor, _) = Brute::new(&[m as i64]).structure(2);
        ensure(r == rank && tor.is_empty(), || format!("oracle B_2(Z/{m}) = ({r}, {tor:?})"))?;
        ensure(s.free_rank == rank && s.torsion.is_empty(), || format!("B_2(Z/{m}) = {s:?}"))?;
    }
    // wider cross-check against the oracle, including torsion
    for orders in [vec![4i64], vec![5], vec![6], vec![2, 2]] {
        let a = AbelianGroup::from_cyclic_orders(&orders.iter().map(|&x| x as u64).collect::<Vec<_>>());
        let s = group_structure(&a, 2, &Limits::default()).map_err(|e| e.to_string())?;
        let (r, tor, _) = Brute::new(&orders).structure(2);
        ensure(s.free_rank == r && as_i128(&s.torsion) == tor, || {
            format!("B_2({}) = {s:?}, oracle ({r}, {tor:?})", a.name())
        })?;
    }
    Ok(format!("B_1(Z/m) = Z^phi(m) for m <= 12, B_2(Z/2) = 0, B_2(Z/3) = Z; slowest {slowest:?}"))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let groups = [vec![2u64], vec![3], vec![4], vec![5], vec![2, 2]];
    let mut checked = 0;
    for f in &groups {
        let a = AbelianGroup::new(f.clone()).map_err(|e| e.to_string())?;
        for n in [2usize, 3] {
            let two = relation_rows(&a, n, 2, &Limits::default()).map_err(|e| e.to_string())?;
            let all = relation_rows(&a, n, n, &Limits::default()).map_err(|e| e.to_string())?;
            let eq = row_space_equal(&two, &all).map_err(|e| e.to_string())?;
            ensure(eq, || format!("row spaces differ for {} n = {n}", a.name()))?;
            checked += 1;
        }
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(60), "presentation check")?;
    Ok(format!("{checked} (A, n) pairs, j <= 2 and all-j row spaces equal; {el:?}"))
}

fn burnside_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_burnside"))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let out = burnside_bin().arg("example-d8").output().map_err(|e| e.to_string())?;
    let el = t.elapsed();
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    within(el, Duration::from_secs(1), "example-d8")?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let betas = |part: &str, which: &str| -> BTreeSet<String> {
        v[part][which].as_array().into_iter().flatten().map(|t| t["beta"].as_str().unwrap_or("").to_string()).collect()
    };
    let expected1: BTreeSet<String> = ["(a1, a1+a2)", "(a2, a1+a2)"].map(String::from).into();
    ensure(betas("raw", "theta1") == expected1, || format!("raw theta1 {:?}", betas("raw", "theta1")))?;
    ensure(v["raw"]["theta2"].as_array().map_or(0, Vec::len) == 1, || "raw theta2 is not one term".into())?;
    ensure(betas("raw", "theta2") == BTreeSet::from(["(a)".to_string()]), || "raw theta2 beta".into())?;
    let raw2 = &v["raw"]["theta2"][0];
    let elems: BTreeSet<&str> = raw2["elements"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
    ensure(elems == BTreeSet::from(["e", "rho^2 sigma"]), || format!("raw theta2 group {elems:?}"))?;

    // Canonical terms against an independent construction of the same symbols.
    let g = FiniteGroup::from_generators(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]]).map_err(|e| e.to_string())?;
    let (rho, sigma) = (1, 2);
    let rho2 = g.mul(rho, rho);
    let h = g.generated_subgroup(&[rho2, sigma]).map_err(|e| e.to_string())?;
    let a = h.characters().map_err(|e| e.to_string())?.clone();
    // a1 is 1/2 on rho^2 and trivial on sigma; a2 the reverse
    let st = h.structure().map_err(|e| e.to_string())?;
    let e = g.exponent_lcm();
    let a1 = st.character_from_values(e, |x| if x == rho2 || x == g.mul(rho2, sigma) { e / 2 } else { 0 }).map_err(|e| e.to_string())?;
    let a2 = st.character_from_values(e, |x| if x == sigma || x == g.mul(rho2, sigma) { e / 2 } else { 0 }).map_err(|e| e.to_string())?;
    let k = FieldLabel::atom("CxC", 0, 1, 2);
    let mut want = SymbolSum::zero();
    for beta in [vec![a1.clone(), a.add(&a1, &a2)], vec![a2.clone(), a.add(&a1, &a2)]] {
        let s = Symbol::new(&h, k.clone(), beta, 2).map_err(|e| e.to_string())?;
        want.add_symbol(&g, &s, 1).map_err(|e| e.to_string())?;
    }
    let got: Vec<Symbol> = v["canonical"]["theta1"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|t| serde_json::from_value(t["symbol"].clone()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let got_set: BTreeSet<&Symbol> = got.iter().collect();
    let want_set: BTreeSet<&Symbol> = want.iter().map(|(s, _)| s).collect();
    ensure(got.len() == 2 && got_set == want_set, || "canonical theta1 differs".into())?;
    let t2: Vec<Symbol> = v["canonical"]["theta2"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|t| serde_json::from_value(t["symbol"].clone()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let reflections: [Vec<usize>; 2] = [vec![0, sigma], {
        let mut s = vec![0, g.mul(rho2, sigma)];
        s.sort();
        s
    }];
    ensure(t2.len() == 1 && reflections.iter().any(|r| r.as_slice() == t2[0].subgroup()) && t2[0].beta().len() == 1, || {
        "canonical theta2 is not a single symbol over the <sigma> class".into()
    })?;
    ensure(canonicalize_symbol(&g, &t2[0]).ok().as_ref() == Some(&t2[0]), || "theta2 not canonical".into())?;
    ensure(v["matches_expected"] == Value::Bool(true), || "report flags a mismatch".into())?;
    Ok(format!("two theta1 terms and one theta2 term over <rho^2 sigma> ~ <sigma>; {el:?}"))
}

/// Abelian test groups with |G| <= 9.
fn small_abelian() -> Vec<AbelianGroup> {
    let mut v: Vec<AbelianGroup> = (1..=9).map(AbelianGroup::cyclic).collect();
    for f in [vec![2, 2], vec![2, 4], vec![2, 2, 2], vec![3, 3]] {
        v.push(AbelianGroup::new(f).unwrap());
    }
    v
}

/// All symbols with H = G, trivial-degree atoms (degree 1 and 2) and n ≤ 3.
fn full_symbols(g: &FiniteGroup, a: &AbelianGroup, n: usize) -> Vec<Symbol> {
    let all: Vec<usize> = (0..g.order()).collect();
    let h = g.subgroup(&all).unwrap();
    let chars = h.characters().unwrap().clone();
    let mut out = Vec::new();
    for d in 0..=n {
        let w = n - d;
        if w < a.rank() {
            continue;
        }
        let Ok(multisets) = enumerate_generators(&chars, w.max(1), &Limits::default()) else { continue };
        let multisets: Vec<Vec<Character>> = if w == 0 { vec![vec![]] } else { multisets };
        for beta in multisets {
            if beta.iter().any(|c| chars.is_zero(c)) {
                continue;
            }
            for deg in [1, 2] {
                let k = FieldLabel::atom("K", d, deg, 1);
                if let Ok(s) = Symbol::new(&h, k, beta.clone(), n) {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn project_sum(g: &FiniteGroup, x: &SymbolSum, p: &BnGPresentation) -> Result<BnGElement, String> {
    let mut e = BnGElement::zero();
    for (s, c) in x.iter() {
        e.add_all(&project_symbol(g, s, p).map_err(|e| e.to_string())?, c);
    }
    Ok(e)
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let (mut symbols, mut b2, mut p46) = (0, 0, 0);
    for a in small_abelian() {
        let g = FiniteGroup::from_abelian(&a).map_err(|e| e.to_string())?;
        for n in 1..=3 {
            let p = BnGPresentation::new(&a, n, &Limits::default()).map_err(|e| e.to_string())?;
            for s in full_symbols(&g, &a, n) {
                symbols += 1;
                let lhs = p.reduce_class(&project_symbol(&g, &s, &p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                let len = s.beta().len();
                for i in 0..len {
                    for j in 0..len {
                        if i == j {
                            continue;
                        }
                        let r = expand_b2(&g, &s, i, j).map_err(|e| e.to_string())?;
                        let mut sum = project_sum(&g, &r.theta1, &p)?;
                        sum.add_all(&project_sum(&g, &r.theta2, &p)?, 1);
                        let rhs = p.reduce_class(&sum).map_err(|e| e.to_string())?;
                        ensure(lhs == rhs, || format!("B2 at ({i},{j}) breaks projection for {s:?} in {}", a.name()))?;
                        b2 += 1;
                    }
                }
                for depth in 2..=len {
                    let x = expand_prop46(&g, &s, depth).map_err(|e| e.to_string())?;
                    let rhs = p.reduce_class(&project_sum(&g, &x, &p)?).map_err(|e| e.to_string())?;
                    ensure(lhs == rhs, || format!("iterated relation j = {depth} breaks projection for {s:?} in {}", a.name()))?;
                    p46 += 1;
                }
            }
        }
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(300), "homomorphism shadow")?;
    Ok(format!("{symbols} symbols, {b2} pair expansions, {p46} iterated expansions; {el:?}"))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for a in small_abelian() {
        for n in 2..=3 {
            let p = BnGPresentation::new(&a, n, &Limits::default()).map_err(|e| e.to_string())?;
            for t in p.generators() {
                let nonzero: Vec<&Character> = t.iter().filter(|c| !a.is_zero(c)).collect();
                let hit = (2..=nonzero.len()).any(|j| {
                    combinations(nonzero.len(), j).iter().any(|idx| {
                        let s = idx.iter().fold(a.zero(), |acc, &k| a.add(&acc, nonzero[k]));
                        a.is_zero(&s)
                    })
                });
                if hit {
                    let c = p.reduce_class(&BnGElement::generator(t.clone(), 1)).map_err(|e| e.to_string())?;
                    ensure(c.is_zero(), || format!("{t:?} in B_{n}({}) is not 0", a.name()))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} generators with a zero-sum sub-multiset reduce to 0"))
}

fn criterion_6() -> Outcome {
    let a = AbelianGroup::new(vec![5, 5]).map_err(|e| e.to_string())?;
    let c = |v: &[i64]| Character(v.to_vec());
    let (e1, e2) = (c(&[1, 0]), c(&[0, 1]));
    let beta = [e1.clone(), e2.clone()];
    let w = |x: &[Character], y: &[Character]| wedge_equivalent(&a, x, y).map_err(|e| e.to_string());
    ensure(!w(&beta, &[e1.clone(), c(&[0, 2])])?, || "(e1,e2) ~ (e1,2e2)".into())?;
    ensure(w(&beta, &[e1.clone(), c(&[0, 4])])?, || "(e1,e2) !~ (e1,4e2)".into())?;
    let mut swaps = 0;
    for g in [vec![3u64], vec![2, 4], vec![5, 5], vec![3, 3], vec![2, 2, 2]] {
        let b = AbelianGroup::new(g).map_err(|e| e.to_string())?;
        let elems: Vec<Character> = b.elements().collect();
        for t in combinations(elems.len(), b.rank()) {
            let tuple: Vec<Character> = t.iter().map(|&i| elems[i].clone()).collect();
            if !b.generates(&tuple).map_err(|e| e.to_string())? {
                continue;
            }
            for (i, j) in combinations(tuple.len(), 2).iter().map(|p| (p[0], p[1])) {
                let mut s = tuple.clone();
                s.swap(i, j);
                ensure(wedge_equivalent(&b, &tuple, &s).map_err(|e| e.to_string())?, || format!("swap changes {tuple:?}"))?;
                swaps += 1;
            }
        }
    }
    Ok(format!("Z/5xZ/5 cases exact; {swaps} swaps invariant"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    for case in 0..500 {
        let (r, c) = (rng.gen_range(1..=8usize), rng.gen_range(1..=8usize));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-20..=20i64)).collect()).collect();
        let m = IntMatrix::from_rows(c, &rows).map_err(|e| e.to_string())?;
        let s = smith_normal_form(&m);
        let prod = s.left.mul(&m).and_then(|x| x.mul(&s.right)).map_err(|e| e.to_string())?;
        ensure(prod == s.diagonal, || format!("case {case}: U·M·V ≠ S"))?;
        for u in [&s.left, &s.right] {
            ensure(u.determinant().is_some_and(|d| d.abs().is_one()), || format!("case {case}: transform not unimodular"))?;
        }
        for i in 0..r {
            for j in 0..c {
                ensure(i == j || s.diagonal[(i, j)].is_zero(), || format!("case {case}: off-diagonal entry"))?;
            }
        }
        let f = s.invariant_factors();
        ensure(f.iter().all(Signed::is_positive), || format!("case {case}: nonpositive factor"))?;
        ensure(f.windows(2).all(|w| (&w[1] % &w[0]).is_zero()), || format!("case {case}: divisibility chain"))?;
        let oracle = minor_gcd_factors(&rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect::<Vec<_>>(), c);
        ensure(as_i128(&f) == oracle, || format!("case {case}: factors {f:?} vs minors {oracle:?}"))?;
    }
    Ok("500 seeded matrices up to 8x8: S = U·M·V, unimodular U and V, divisibility, minor gcds".into())
}

/// (file, args) pairs for the golden outputs.
pub const GOLDENS: &[(&str, &[&str])] = &[
    ("bng_structure_z3_n2.json", &["bng-structure", "--group", r#"{"invariant_factors":[3]}"#, "--n", "2"]),
    ("verify_prop71_z2_n2.json", &["verify-prop71", "--group", r#"{"invariant_factors":[2]}"#, "--n", "2"]),
    ("bng_structure_z2_n2.csv", &["bng-structure", "--group", r#"{"invariant_factors":[2]}"#, "--n", "2", "--format", "csv"]),
    ("bng_structure_z2_n1.csv", &["bng-structure", "--group", r#"{"invariant_factors":[2]}"#, "--n", "1", "--format", "csv"]),
    ("example_d8.json", &["example-d8"]),
];

fn criterion_8() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (file, args) in GOLDENS {
        let want = std::fs::read(dir.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let out = burnside_bin().args(*args).output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{file}: exit {:?}", out.status.code()))?;
        ensure(out.stdout == want, || format!("{file}: output differs"))?;
        let again = burnside_bin().args(*args).output().map_err(|e| e.to_string())?;
        ensure(again.stdout == out.stdout, || format!("{file}: nondeterministic"))?;
    }
    Ok(format!("{} golden outputs byte-identical", GOLDENS.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("structure suite", criterion_1),
        ("j = 2 presentation", criterion_2),
        ("D8 blow-up example", criterion_3),
        ("homomorphism shadow", criterion_4),
        ("zero-sum shadow", criterion_5),
        ("wedge criterion", criterion_6),
        ("zlinalg properties", criterion_7),
        ("CLI goldens", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let el = t.elapsed();
        match r {
            Ok(detail) => println!("PASS {} {name} [{:.2}s]: {detail}", k + 1, el.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} [{:.2}s]: {why}", k + 1, el.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
