//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p bn-invariants --test acceptance`.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use bn_invariants::hilbert::{
    fmaj_numerator, invariant_dimension, invariant_dimension_by_elimination, maj_inv_equidistribution,
    series_coefficient, verify_basis_rank,
};
use bn_invariants::{
    compare, decompose, descent_monomial_a, diagonal_descent_monomial_e, diagonal_signed_descent_monomial_c, evaluate,
    is_ordered, signed_descent_monomial_b, signed_index_permutation, straighten, BasisExpansion, Monomial, QPolynomial,
    Rational, SignedPermutation,
};
use common::*;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sp(text: &str) -> SignedPermutation {
    text.parse().unwrap()
}

fn mono(p: &[u32], q: &[u32]) -> Monomial {
    Monomial::new(p, q).unwrap()
}

fn worked_examples() -> Outcome {
    let a = descent_monomial_a(&sp("[6,2,1,4,3,5]")).map_err(|e| e.to_string())?;
    ensure(a.to_string() == "x1 x2^2 x4 x6^3", || format!("a = {a}"))?;
    let e = diagonal_descent_monomial_e(&sp("[4,6,1,2,5,3]")).map_err(|e| e.to_string())?;
    ensure(e.to_string() == "x1^2 x2^2 x3^2 x4 x5 y1 y2 y4^2 y5 y6^2", || {
        format!("e = {e}")
    })?;
    let b = signed_descent_monomial_b(&sp("[-6,2,-1,-4,3,5]"));
    ensure(b.to_string() == "x1^3 x2^4 x4 x6^5", || format!("b = {b}"))?;
    let c = diagonal_signed_descent_monomial_c(&sp("[2,-1,-4,3]"));
    ensure(c.to_string() == "x1^3 x2^2 x3^2 x4 y1^3 y2^4 y4", || format!("c = {c}"))?;

    let m = mono(&[7, 6, 6, 5, 5, 3], &[3, 8, 6, 3, 5, 5]);
    let s = signed_index_permutation(&m).map_err(|e| e.to_string())?;
    ensure(s == sp("[2,3,-6,-5,-4,-1]"), || format!("index permutation {s}"))?;

    let m = mono(&[7, 6, 6, 5], &[3, 8, 6, 5]);
    let w = mono(&[7, 6, 6, 5], &[5, 8, 6, 3]);
    let key = bn_invariants::descent_basis::ordering_key(&m);
    let flat: Vec<u32> = key.0.iter().chain(&key.1).copied().collect();
    ensure(flat == [7, 6, 6, 5, 8, 6, 5, 3], || format!("ordering key {flat:?}"))?;
    ensure(key == bn_invariants::descent_basis::ordering_key(&w), || {
        "keys differ".into()
    })?;
    ensure(compare(&m, &w) == Ok(std::cmp::Ordering::Greater), || {
        "m is not above w".into()
    })?;
    Ok("4 monomials, index permutation, order pair".into())
}

fn odd_pairs_vanish() -> Outcome {
    let mut zero = 0;
    let mut checked = 0;
    for p in grid(2, 4) {
        for q in grid(2, 4) {
            let f = single(&p, &q);
            let fast = f.rho().map_err(|e| e.to_string())?;
            let oracle = brute_rho(&p, &q);
            ensure(as_map(&fast) == oracle, || {
                format!("rho differs from oracle at {p:?} {q:?}")
            })?;
            let odd = p.iter().zip(&q).any(|(a, b)| (a + b) % 2 == 1);
            ensure(fast.is_zero() == odd, || format!("vanishing fails at {p:?} {q:?}"))?;
            zero += usize::from(odd);
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} monomials, {zero} vanish, all match the brute-force average"
    ))
}

fn decomposition_invariants() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for e in grid(2 * n, 5) {
            let (p, q) = e.split_at(n);
            let m = mono(p, q);
            let ordered = ordered_by_conditions(p, q);
            ensure(is_ordered(&m) == ordered, || format!("ordered disagrees at {m:?}"))?;
            if !ordered {
                continue;
            }
            let d = decompose(&m).map_err(|err| err.to_string())?;
            let w = d.sigma.window().to_vec();
            let delta = f_seq(&inverse_window(&w));
            let f = f_seq(&w);
            let mut gamma = vec![0; n];
            for i in 0..n {
                gamma[w[i].unsigned_abs() as usize - 1] = f[i];
            }
            let fail = |what: &str| format!("{what} at {m:?}");
            ensure(d.delta == delta && d.gamma == gamma, || fail("delta/gamma"))?;
            ensure((0..n).all(|i| p[i] == 2 * d.nu[i] + delta[i]), || {
                fail("p = 2nu + delta")
            })?;
            ensure((0..n).all(|i| q[i] == 2 * d.mu[i] + gamma[i]), || {
                fail("q = 2mu + gamma")
            })?;
            let at = |v: &[u32], i: usize| v[w[i].unsigned_abs() as usize - 1];
            for i in 1..n {
                ensure(d.nu[i - 1] >= d.nu[i] && delta[i - 1] >= delta[i], || {
                    fail("nu/delta monotone")
                })?;
                ensure(at(&d.mu, i - 1) >= at(&d.mu, i), || fail("mu monotone along sigma"))?;
                ensure(at(&gamma, i - 1) >= at(&gamma, i), || {
                    fail("gamma monotone along sigma")
                })?;
            }
            for i in 0..n {
                for j in i + 1..n {
                    let ok = twist(q[i]) >= twist(q[j]);
                    ensure(delta[i] != delta[j] || ok, || fail("delta tie"))?;
                    ensure(gamma[i] != gamma[j] || ok, || fail("gamma tie"))?;
                }
            }
            let two_nu: Vec<u32> = d.nu.iter().map(|v| 2 * v).collect();
            let two_mu: Vec<u32> = d.mu.iter().map(|v| 2 * v).collect();
            let recon = mono(&two_nu, &two_mu).mul(&diagonal_signed_descent_monomial_c(&d.sigma));
            ensure(recon == m, || fail("reconstruction"))?;
            count += 1;
        }
    }
    Ok(format!("{count} ordered monomials decomposed"))
}

fn random_invariant(rng: &mut ChaCha8Rng, n: usize) -> QPolynomial {
    loop {
        let mut f = QPolynomial::zero(n);
        for _ in 0..rng.gen_range(1..=4) {
            let total = rng.gen_range(0..=10u32);
            let mut e = vec![0u32; 2 * n];
            for _ in 0..total {
                e[rng.gen_range(0..2 * n)] += 1;
            }
            // odd pairs average to zero; repair most of them so f is not tiny
            for k in 0..n {
                if (e[k] + e[n + k]) % 2 == 1 && rng.gen_bool(0.8) {
                    if e[k] > 0 {
                        e[k] -= 1;
                    } else {
                        e[n + k] -= 1;
                    }
                }
            }
            let c = Rational::new(rng.gen_range(-9..=9i64).into(), rng.gen_range(1..=6i64).into());
            let term = single(&e[..n], &e[n..]).rho().unwrap().scale(&c);
            f += &term;
        }
        if !f.is_zero() {
            return f;
        }
    }
}

fn support_bound_holds(f: &QPolynomial, e: &BasisExpansion) -> bool {
    let comps = f.bidegree_components();
    e.entries().all(|(s, _)| {
        let (a, b) = (s.inverse().fmaj(), s.fmaj());
        comps.keys().any(|bd| a <= bd.a && b <= bd.b)
    })
}

fn free_basis_round_trip() -> Outcome {
    let mut basis = 0;
    for s in SignedPermutation::enumerate(3).map_err(|e| e.to_string())? {
        let f = QPolynomial::from_monomial(diagonal_signed_descent_monomial_c(&s), Rational::one())
            .rho()
            .map_err(|e| e.to_string())?;
        let e = straighten(&f).map_err(|e| e.to_string())?;
        ensure(e == BasisExpansion::unit(s.clone()), || {
            format!("straighten(rho(c_{s})) is not the unit")
        })?;
        basis += 1;
    }
    ensure(basis == 48, || format!("{basis} elements in B_3"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut trips, mut terms, mut entries) = (0, 0, 0);
    for round in 0..120 {
        let n = 1 + round % 3;
        let f = random_invariant(&mut rng, n);
        let e = straighten(&f).map_err(|err| format!("{err} for {f}"))?;
        let back = evaluate(&e).map_err(|err| err.to_string())?;
        ensure(back == f, || format!("round trip fails for {f}"))?;
        ensure(e.coefficients_separately_invariant(), || {
            format!("coefficients not in R for {f}")
        })?;
        ensure(support_bound_holds(&f, &e), || format!("support bound fails for {f}"))?;
        trips += 1;
        terms += f.len();
        entries += e.len();
    }
    Ok(format!(
        "48 basis elements, {trips} random invariants round-trip ({terms} terms, {entries} basis entries)"
    ))
}

fn hilbert_identity() -> Outcome {
    let mut cells = 0;
    for (n, max) in [(1usize, 12u32), (2, 10)] {
        for total in 0..=max {
            for a in 0..=total {
                let b = total - a;
                let dim = invariant_dimension(n, a, b).map_err(|e| e.to_string())?;
                let series = series_coefficient(n, a, b).map_err(|e| e.to_string())?;
                let oracle = if n == 1 {
                    usize::from(a % 2 == b % 2)
                } else {
                    invariant_dimension_by_elimination(n, a, b).map_err(|e| e.to_string())?
                };
                ensure(dim as u64 == series && dim == oracle, || {
                    format!("n={n} ({a},{b}): dim {dim}, series {series}, oracle {oracle}")
                })?;
                let r = verify_basis_rank(n, a, b).map_err(|e| e.to_string())?;
                ensure(r.pass && r.rank == dim && r.generators == dim, || {
                    format!("cell failed: {r:?}")
                })?;
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells, rank = dim = series = generators"))
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn statistics_identities() -> Outcome {
    let mut seen = 0;
    for s in SignedPermutation::enumerate(4).map_err(|e| e.to_string())? {
        let w = s.window();
        let f = f_seq(w);
        ensure(s.f_sequence() == f, || format!("f-sequence of {s}"))?;
        ensure(s.fmaj() == 2 * s.maj() + s.neg(), || format!("fmaj identity at {s}"))?;
        ensure(s.fmaj() == f.iter().sum::<u32>(), || format!("fmaj sum at {s}"))?;
        let maj: usize = (1..4).filter(|&i| w[i - 1] > w[i]).sum();
        ensure(s.maj() as usize == maj, || format!("maj at {s}"))?;
        ensure(f.windows(2).all(|p| p[0] >= p[1]), || format!("f not monotone at {s}"))?;
        for i in 0..4 {
            for j in i + 1..4 {
                if f[i] == f[j] {
                    let run = &w[i..=j];
                    let increasing = run.windows(2).all(|p| p[0] < p[1]);
                    let one_sign = run.iter().all(|&v| v > 0) || run.iter().all(|&v| v < 0);
                    ensure(increasing && one_sign, || format!("run property at {s}, {i}..{j}"))?;
                }
            }
        }
        seen += 1;
    }
    ensure(seen == 384, || format!("{seen} elements in B_4"))?;

    for n in 1..=4 {
        let num = fmaj_numerator(n).map_err(|e| e.to_string())?;
        ensure(num.is_symmetric(), || format!("numerator not symmetric at n={n}"))?;
        let mut brute = vec![0u64; n * n + 1];
        for w in signed_windows(n) {
            brute[f_seq(&w).iter().sum::<u32>() as usize] += 1;
        }
        let mut product = vec![1u64];
        for i in 1..=n {
            product = poly_mul(&product, &vec![1; 2 * i]);
        }
        let marginal = trim(num.t_marginal());
        ensure(marginal == trim(brute.clone()), || {
            format!("marginal {marginal:?} vs brute {brute:?}")
        })?;
        ensure(marginal == trim(product.clone()), || {
            format!("marginal {marginal:?} vs product {product:?}")
        })?;
    }
    Ok("B_4 exhaustive; numerator symmetric and marginal matches for n <= 4".into())
}

fn macmahon() -> Outcome {
    for n in 1..=6 {
        let mut maj = BTreeMap::new();
        let mut inv = BTreeMap::new();
        for w in plain_permutations(n) {
            let m: usize = (1..n).filter(|&i| w[i - 1] > w[i]).sum();
            let k = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| w[i] > w[j])
                .count();
            *maj.entry(m).or_insert(0u64) += 1;
            *inv.entry(k).or_insert(0u64) += 1;
        }
        ensure(maj == inv, || format!("oracle distributions differ at n={n}"))?;
        let lib = maj_inv_equidistribution(n).map_err(|e| e.to_string())?;
        ensure(lib, || format!("library reports a mismatch at n={n}"))?;
    }
    Ok("n = 1..6".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked-example regression", worked_examples),
        ("averages vanish exactly on odd pairs", odd_pairs_vanish),
        ("decomposition invariants and reconstruction", decomposition_invariants),
        ("free-basis round trip", free_basis_round_trip),
        ("Hilbert-series identity and degreewise freeness", hilbert_identity),
        ("statistics identities", statistics_identities),
        ("MacMahon equidistribution", macmahon),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {}. {name} ({detail}; {secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
