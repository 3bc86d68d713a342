//! Acceptance run: one pass/fail line per criterion, followed by the items
//! behind it. Every comparison is exact; there are no numerical tolerances.
//!
//! Expected values come either from worked examples or from brute-force
//! oracles written here against the monomial definitions, without going
//! through the library's basis changes.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ncsym::combinatorics::{
    delta_pi, partition_stats, Composition, IntegerPartition, Permutation, SetPartition, SkewShape,
};
use ncsym::lgv::{self, LatticePath, PathTuple};
use ncsym::ncpoly::{NCPolynomial, Word};
use ncsym::ncschur;
use ncsym::ncsym::{NcBasis, NcExpr};
use ncsym::nsym::{ribbon_to_h, NSymExpr};
use ncsym::sym::{SymBasis, SymExpr};
use ncsym::verify;
use ncsym::Q;

/// Items whose statement is false for the objects as defined; they must keep
/// failing for the reason recorded with them.
const KNOWN_FALSE: &[(&str, &str)] = &[(
    "s→h transition matrix unitriangular with determinant 1 (n ≤ 5)",
    "the coefficient of h_π in s_π is 1/λ(π)!, so the diagonal is not 1 and det = Π 1/λ(π)!",
)];

struct Item {
    name: String,
    ok: bool,
    detail: String,
}

struct Criterion {
    id: usize,
    title: &'static str,
    items: Vec<Item>,
}

impl Criterion {
    fn new(id: usize, title: &'static str) -> Self {
        Self { id, title, items: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.items.push(Item { name: name.into(), ok, detail: detail.into() });
    }

    fn suite(&mut self, r: verify::SuiteReport) {
        let detail = format!("{} ({} checks){}", r.range, r.checks, r.failures.first().map(|f| format!("; first failure: {}", f)).unwrap_or_default());
        let name = format!("suite {}", r.name);
        self.check(name, r.passed(), detail);
    }
}

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn fact(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn e(s: &str) -> NcExpr {
    s.parse().unwrap()
}

fn sp(s: &str) -> SetPartition {
    s.parse().unwrap()
}

fn shape(s: &str) -> SkewShape {
    s.parse().unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

// ---------------------------------------------------------------------------
// Brute-force oracles over words.

fn words(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| (1..=k).map(move |l| {
                let mut v = w.clone();
                v.push(l);
                v
            }))
            .collect();
    }
    out
}

/// Restricted growth labels of the partition `i ~ j ⇔ key[i] = key[j]`.
fn kernel<T: PartialEq + Clone>(key: &[T]) -> Vec<usize> {
    let mut seen: Vec<T> = Vec::new();
    key.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(p) => p,
            None => {
                seen.push(x.clone());
                seen.len() - 1
            }
        })
        .collect()
}

fn labels(pi: &SetPartition) -> Vec<usize> {
    let mut key = vec![0; pi.size()];
    for (b, block) in pi.blocks().iter().enumerate() {
        for &i in block {
            key[i - 1] = b;
        }
    }
    kernel(&key)
}

fn meet(a: &[usize], b: &[usize]) -> Vec<usize> {
    kernel(&a.iter().zip(b).map(|(x, y)| (*x, *y)).collect::<Vec<_>>())
}

fn refines(a: &[usize], b: &[usize]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] != a[j] || b[i] == b[j]))
}

fn block_sizes(a: &[usize]) -> Vec<usize> {
    let mut sizes = vec![0; a.iter().max().map_or(0, |m| m + 1)];
    for &x in a {
        sizes[x] += 1;
    }
    sizes
}

/// Coefficient of the word `w` in `b_π` from the defining formulas.
fn defining_coefficient(basis: NcBasis, pi: &[usize], w: &[usize]) -> i64 {
    let ker = kernel(w);
    match basis {
        NcBasis::M => (ker == pi) as i64,
        NcBasis::P => refines(pi, &ker) as i64,
        NcBasis::E => block_sizes(&meet(&ker, pi)).iter().all(|&s| s == 1) as i64,
        NcBasis::H => block_sizes(&meet(&ker, pi)).iter().map(|&s| fact(s)).product(),
        _ => unreachable!(),
    }
}

fn poly_map(p: &NCPolynomial) -> HashMap<Vec<usize>, Q> {
    p.sorted_terms()
        .into_iter()
        .map(|(w, c)| (w.letters().iter().map(|&l| l as usize).collect(), c.clone()))
        .collect()
}

/// All semistandard fillings with entries ≤ k, rows in reading order.
fn ssyt(s: &SkewShape, k: usize) -> Vec<Vec<usize>> {
    let boxes: Vec<(usize, usize)> = (0..s.rows())
        .flat_map(|i| (s.inner().part(i)..s.outer().part(i)).map(move |j| (i, j)))
        .collect();
    words(boxes.len(), k)
        .into_iter()
        .filter(|f| {
            let at = |i: usize, j: usize| boxes.iter().position(|&b| b == (i, j)).map(|p| f[p]);
            boxes.iter().enumerate().all(|(p, &(i, j))| {
                (j == 0 || at(i, j - 1).map_or(true, |l| l <= f[p]))
                    && (i == 0 || at(i - 1, j).map_or(true, |u| u < f[p]))
            })
        })
        .collect()
}

/// `Σ_{δ ∈ 𝔖_n} Σ_T x_{c(T_δ(1))} ⋯ x_{c(T_δ(n))}`.
fn rosas_sagan_words(s: &SkewShape, k: usize) -> HashMap<Vec<usize>, Q> {
    let n = s.size();
    let perms = Permutation::all(n);
    let mut out: HashMap<Vec<usize>, Q> = HashMap::new();
    for t in ssyt(s, k) {
        for d in &perms {
            let w: Vec<usize> = (1..=n).map(|i| t[d.apply(i) - 1]).collect();
            *out.entry(w).or_insert_with(Q::zero) += Q::one();
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn hook_count(l: &IntegerPartition) -> usize {
    let t = l.transpose();
    let hooks: i64 = (0..l.len())
        .flat_map(|i| (0..l.part(i)).map(move |j| (i, j)))
        .map(|(i, j)| (l.part(i) - j + t.part(j) - i - 1) as i64)
        .product();
    (fact(l.size()) / hooks) as usize
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "worked examples");
    let (f, m, t) = partition_stats(&"3.2.2.1".parse().unwrap());
    c.check("stats of 3221", f == BigInt::from(24) && m == BigInt::from(2) && t.to_string() == "4.3.1", format!("({}, {}, {})", f, m, t));
    let s = sp("134/25").slash(&sp("1/23"));
    c.check("134/25 | 1/23", s.to_string() == "134/25/6/78", s.to_string());
    let (_, d) = delta_pi(&sp("169/2/378/45"));
    c.check("δ of 169/2/378/45", d == perm("169378452"), d.to_string());
    let h = NcExpr::single(NcBasis::H, sp("13/2")).to_m().unwrap();
    c.check("h_{13/2} in m", h == e("2 m[123] + m[12/3] + m[1/23] + 2 m[13/2] + m[1/2/3]"), h.to_string());
    for (name, got, want) in [
        ("s_[21]", ncschur::source_skew_schur(&shape("2.1")), "1/2 h[12/3] - 1/6 h[123]"),
        ("s_[22/1]", ncschur::source_skew_schur(&shape("2.2/1")), "1/2 h[1/23] - 1/6 h[123]"),
        ("s_{12/3}", ncschur::standard_schur(&sp("12/3")), "1/2 h[12/3] - 1/6 h[123]"),
        ("s_{13/2}", ncschur::standard_schur(&sp("13/2")), "1/2 h[13/2] - 1/6 h[123]"),
    ] {
        c.check(name, got == e(want), got.to_string());
    }
    let id = Permutation::identity;
    let p1 = ncschur::schur_product(&id(1), &"1".parse().unwrap(), &id(3), &"2.1".parse().unwrap()).unwrap();
    let ok = p1.holds && p1.concat == ncschur::source_skew_schur(&shape("2.2.1/1")) && p1.near_concat == ncschur::source_skew_schur(&shape("3.1"));
    c.check("s_[1]s_[21] = s_[221/1] + s_[31]", ok, p1.product.to_string());
    let p2 = ncschur::schur_product(&id(3), &"2.1".parse().unwrap(), &id(1), &"1".parse().unwrap()).unwrap();
    let ok = p2.holds && p2.concat == ncschur::source_skew_schur(&shape("2.1.1")) && p2.near_concat == ncschur::source_skew_schur(&shape("3.2/1"));
    c.check("s_[21]s_[1] = s_[211] + s_[32/1]", ok, p2.product.to_string());
    let sc = perm("13425").shifted_concat(&perm("123"));
    c.check("13425|123", sc == perm("13425678"), sc.to_string());
    let r = ribbon_to_h(&"1.2".parse::<Composition>().unwrap());
    c.check("r_12 = h_12 - h_3", r == "H[1.2] - H[3]".parse::<NSymExpr>().unwrap(), r.to_string());
    let s21 = SymExpr::single(SymBasis::S, "2.1".parse().unwrap()).convert(SymBasis::H).unwrap();
    let want = SymExpr::single(SymBasis::H, "2.1".parse().unwrap()).sub(&SymExpr::single(SymBasis::H, "3".parse().unwrap())).unwrap();
    c.check("s_21 = h_21 - h_3 in Sym", s21 == want, s21.to_string());
    let p = PathTuple::new(
        shape("3.3.2/1.1"),
        vec![
            LatticePath::new(-1, vec![2, 2, 3]).unwrap(),
            LatticePath::new(0, vec![3]).unwrap(),
            LatticePath::new(-3, vec![1, 3]).unwrap(),
        ],
    )
    .unwrap();
    let (_, xi) = lgv::lgv_swap(&p);
    c.check("LGV swap ξ_P on 332/110", xi == perm("342156"), xi.to_string());
    let w = p.monomial(&perm("315462")).unwrap();
    c.check("x^(315462, P)", w == Word::from_usize(&[3, 2, 1, 3, 3, 2]), w.to_string());
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "identity suites");
    c.suite(verify::prod(7).unwrap());
    let tri = verify::ncschur_triangular(5).unwrap();
    for n in &tri.notes {
        c.check("observation", true, n.clone());
    }
    c.suite(tri);
    let mut literal = true;
    let mut det_detail = Vec::new();
    for n in 1..=5 {
        let (_, m) = ncschur::schur_transition_matrix(n);
        let unit = m.is_upper_triangular() && m.diagonal().iter().all(|d| d.is_one());
        let det = m.determinant();
        literal &= unit && det.is_one();
        det_detail.push(format!("n={}: det {}", n, det));
    }
    c.check(KNOWN_FALSE[0].0, literal, det_detail.join(", "));
    c.suite(verify::transpose(5).unwrap());
    c.suite(verify::deltaact(200, 3, 2024).unwrap());
    c.suite(verify::rsrefines(5).unwrap());
    c.suite(verify::rslr(6).unwrap());
    c.suite(verify::iota(6).unwrap());
    c.suite(verify::hmult(6).unwrap());
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "monomial oracle against direct word enumeration");
    for basis in [NcBasis::M, NcBasis::P, NcBasis::E, NcBasis::H] {
        let mut mismatches = 0;
        let mut total = 0;
        let mut rho_bad = 0;
        for n in 1..=4 {
            let ws = words(n, n);
            for pi in SetPartition::all(n) {
                total += 1;
                let f = NcExpr::single(basis, pi.clone());
                let oracle = f.oracle_expand(n).unwrap();
                let got = poly_map(&oracle);
                let lab = labels(&pi);
                let mut want = HashMap::new();
                for w in &ws {
                    let c = defining_coefficient(basis, &lab, w);
                    if c != 0 {
                        want.insert(w.clone(), q(c));
                    }
                }
                if got != want {
                    mismatches += 1;
                }
                let sizes = block_sizes(&lab);
                let l = IntegerPartition::from_unsorted(sizes.clone());
                let scale = match basis {
                    NcBasis::M => {
                        let mut mult: HashMap<usize, usize> = HashMap::new();
                        for s in &sizes {
                            *mult.entry(*s).or_default() += 1;
                        }
                        mult.values().map(|&m| fact(m)).product()
                    }
                    NcBasis::P => 1,
                    _ => sizes.iter().map(|&s| fact(s)).product(),
                };
                let sym_basis = match basis {
                    NcBasis::M => SymBasis::M,
                    NcBasis::P => SymBasis::P,
                    NcBasis::E => SymBasis::E,
                    _ => SymBasis::H,
                };
                let want_c = SymExpr::single(sym_basis, l).scale(&q(scale)).to_cpoly(n).unwrap();
                if oracle.commutative_image() != want_c || f.rho().unwrap().to_cpoly(n).unwrap() != want_c {
                    rho_bad += 1;
                }
            }
        }
        c.check(format!("{} basis, n ≤ 4, k = n", basis.letter()), mismatches == 0, format!("{} set partitions, {} mismatches", total, mismatches));
        c.check(format!("ρ scaling for {}", basis.letter()), rho_bad == 0, format!("{} mismatches", rho_bad));
    }
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "lattice-path swap");
    c.suite(verify::lgv_suite(4, 3).unwrap());
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=4 {
        for s in SkewShape::all_without_empty_lines(n) {
            for k in 1..=3 {
                count += 1;
                if poly_map(&lgv::signed_monomial_sum(&s, k)) != rosas_sagan_words(&s, k) {
                    bad.push(format!("{} k={}", s, k));
                }
            }
        }
    }
    c.check("signed path sum equals Σ_T Σ_δ x^(δ,T) from direct SSYT enumeration", bad.is_empty(), format!("{} (shape, cap) pairs; failures: {:?}", count, bad));
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "Specht vector ranks");
    for n in 1..=5 {
        for l in IntegerPartition::all(n) {
            let r = ncschur::specht_rank(&l).unwrap();
            let f = hook_count(&l);
            let which = if r == 0 { "0" } else if r == f { "f^λ" } else { "neither" };
            c.check(format!("λ = {}", l), r == 0 || r == f, format!("rank {} (f^λ = {}): {}", r, f, which));
        }
    }
    c
}

/// Unshuffle of `f(X + Y)`: words in `2k` letters split into the
/// subword on `1..=k` and the subword on `k+1..=2k`.
fn unshuffle(f: &HashMap<Vec<usize>, Q>, k: usize) -> HashMap<(Vec<usize>, Vec<usize>), Q> {
    let mut out: HashMap<(Vec<usize>, Vec<usize>), Q> = HashMap::new();
    for (w, c) in f {
        let u: Vec<usize> = w.iter().copied().filter(|&l| l <= k).collect();
        let v: Vec<usize> = w.iter().filter(|&&l| l > k).map(|&l| l - k).collect();
        *out.entry((u, v)).or_insert_with(Q::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "Rosas–Sagan coproduct");
    c.suite(verify::rscoprod(4).unwrap());
    for n in 1..=4 {
        for l in IntegerPartition::all(n) {
            let k = n;
            let big = rosas_sagan_words(&SkewShape::straight(l.clone()), 2 * k);
            let split = unshuffle(&big, k);
            let mut ok = true;
            for i in 0..=n {
                let lhs: HashMap<_, _> = split.iter().filter(|((u, _), _)| u.len() == i).map(|(a, b)| (a.clone(), b.clone())).collect();
                let binom = q(fact(n) / (fact(i) * fact(n - i)));
                let mut rhs: HashMap<(Vec<usize>, Vec<usize>), Q> = HashMap::new();
                for mu in IntegerPartition::all(i).into_iter().filter(|m| l.contains(m)) {
                    let a = rosas_sagan_words(&SkewShape::straight(mu.clone()), k);
                    let b = rosas_sagan_words(&SkewShape::new(l.clone(), mu).unwrap(), k);
                    for (u, cu) in &a {
                        for (v, cv) in &b {
                            *rhs.entry((u.clone(), v.clone())).or_insert_with(Q::zero) += cu * cv * &binom;
                        }
                    }
                }
                rhs.retain(|_, c| !c.is_zero());
                ok &= lhs == rhs;
            }
            c.check(format!("λ = {} by alphabet doubling, all i", l), ok, format!("k = {} letters per alphabet", k));
        }
    }
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "distinct Schur-like bases");
    let n = 3;
    let omega = ncschur::standard_schur(&sp("123")).omega().unwrap().convert(NcBasis::H).unwrap();
    let formula: NcExpr = NcExpr::new(
        NcBasis::H,
        SetPartition::all(n)
            .into_iter()
            .map(|tau| {
                let l = tau.len();
                let sign = if (n - l) % 2 == 0 { 1 } else { -1 };
                (tau, q(sign * fact(l)) / q(fact(n)))
            })
            .collect(),
    );
    c.check("ω(s_123) = (1/3!) Σ (−1)^τ ℓ(τ)! h_τ", omega == formula, omega.to_string());
    let singles: NcExpr = NcExpr::new(
        NcBasis::H,
        Composition::all(n)
            .into_iter()
            .map(|a| {
                let sign = if (n + a.len()) % 2 == 0 { 1 } else { -1 };
                let denom: i64 = a.parts().iter().map(|&p| fact(p)).product();
                (a.set_partition(), q(sign) / q(denom))
            })
            .collect(),
    );
    c.check("s_{1/2/3} = Σ_α (−1)^{n+ℓ(α)} (1/α!) h_[α]", ncschur::standard_schur(&sp("1/2/3")) == singles, singles.to_string());
    let s123 = ncschur::standard_schur(&sp("123"));
    let st: Vec<NcExpr> = SetPartition::all(n).iter().map(|p| ncschur::transposed_schur(p).convert(NcBasis::H).unwrap()).collect();
    c.check("s_123 is not any s^t_π at n = 3", st.iter().all(|x| *x != s123), "witness σ = 123");

    let n = 5;
    let key = |v: &[NcExpr]| v.iter().map(|x| x.to_string()).collect::<BTreeSet<String>>();
    let standard = ncschur::permuted_basis(&Permutation::identity(n), n).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut deltas = Vec::new();
    while deltas.len() < 10 {
        let mut v: Vec<usize> = (1..=n).collect();
        v.shuffle(&mut rng);
        let d = Permutation::new(v).unwrap();
        if !d.is_identity() && !deltas.contains(&d) {
            deltas.push(d);
        }
    }
    let mut sets = vec![key(&standard)];
    let (mut p1, mut p2, mut p4) = (true, true, true);
    let keys = SetPartition::all_in_basis_order(n);
    for d in &deltas {
        let b = ncschur::permuted_basis(d, n).unwrap();
        p1 &= ncschur::h_rank(&b, n).unwrap() == keys.len();
        let k = key(&b);
        p2 &= k != sets[0];
        sets.push(k);
        p4 &= b.iter().zip(&keys).all(|(x, pi)| {
            x.rho().unwrap().equals(&SymExpr::single(SymBasis::S, pi.shape())).unwrap()
        });
    }
    let p3 = (0..sets.len()).all(|i| (i + 1..sets.len()).all(|j| sets[i] != sets[j]));
    let ds = deltas.iter().map(|d| d.to_string().replace(',', "")).collect::<Vec<_>>().join(" ");
    c.check("{δ∘s_π} is a basis (rank 52) at n = 5", p1, format!("δ ∈ {{{}}}", ds));
    c.check("{δ∘s_π} ≠ {s_π} for δ ≠ id", p2, "");
    c.check("the 11 sets {δ∘s_π} (with id) are pairwise distinct", p3, "");
    c.check("ρ(δ∘s_π) = s_λ(π)", p4, "");
    c
}

fn main() {
    let runs: [fn() -> Criterion; 7] = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7];
    let mut unexpected = Vec::new();
    println!("acceptance: exact arithmetic, tolerance 0");
    for run in runs {
        let start = Instant::now();
        let c = run();
        let secs = start.elapsed().as_secs_f64();
        let failing: Vec<&Item> = c.items.iter().filter(|i| !i.ok).collect();
        let known: Vec<&&Item> = failing.iter().filter(|i| KNOWN_FALSE.iter().any(|(n, _)| *n == i.name)).collect();
        let status = if failing.is_empty() { "PASS" } else { "FAIL" };
        let extra = if !known.is_empty() && known.len() == failing.len() {
            format!(" ({} item(s) false as stated; see below)", known.len())
        } else {
            String::new()
        };
        println!("[{}] criterion {}: {}, {} items, {:.2}s{}", status, c.id, c.title, c.items.len(), secs, extra);
        for i in &c.items {
            let mark = if i.ok { "ok  " } else { "FAIL" };
            println!("    {} {}: {}", mark, i.name, i.detail);
            if let Some((_, why)) = KNOWN_FALSE.iter().find(|(n, _)| *n == i.name) {
                println!("         reason: {}", why);
            }
        }
        for i in failing {
            if !KNOWN_FALSE.iter().any(|(n, _)| *n == i.name) {
                unexpected.push(format!("criterion {}: {}", c.id, i.name));
            }
        }
        for (n, _) in KNOWN_FALSE {
            if c.items.iter().any(|i| i.name == *n && i.ok) {
                unexpected.push(format!("criterion {}: {} now holds; update the analysis", c.id, n));
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected");
    } else {
        println!("acceptance: unexpected results:");
        for u in &unexpected {
            println!("    {}", u);
        }
        std::process::exit(1);
    }
}
