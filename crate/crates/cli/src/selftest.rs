//! The acceptance grid at a chosen scale, built on the library's own
//! independent routes (brute force against closed forms, two evaluation
//! routes, enumeration against census). Each criterion is cached separately.

use cyclic_sieve::actions::{bw_action, cdp_action, cmp_action, CyclicAction};
use cyclic_sieve::arith::{binomial, divisors, gcd, mobius};
use cyclic_sieve::csp::{
    beta_witness_search, family_member, inv_homomesy, lyndon_check, lyndon_construct,
    lyndon_params, theorem_aa, verify_avl_csp, verify_bw_csp, verify_cdp_csp,
    verify_cdp_fixed_lemma, verify_cmp_csp, verify_csp, CmpPolynomial, Family, FamilyMember,
    HomomesyAction,
};
use cyclic_sieve::genfunc::{
    avl_q_bruteforce, avl_q_closed, bw_q, carlitz_q_catalan, cdp_count, cdp_q_bruteforce,
    cdp_q_closed, cdp_q_three_term, cmp_q, dp_q_bruteforce, h_bruteforce, h_closed, BwForm,
    DiagonalSpec, Side,
};
use cyclic_sieve::paths::{enumerate_cdp, enumerate_cmp};
use cyclic_sieve::qpoly::{eval_at_unity, mod_cyclic, q_binomial, q_lucas_eval, RootOfUnityIndex};
use cyclic_sieve::{IntPolynomial, LyndonParameters};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cache::{Cache, Params};
use crate::CliError;

/// Scale at which every criterion runs its full grid.
pub const FULL_SCALE: usize = 8;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `full * scale / FULL_SCALE`, rounded up.
pub fn scaled(full: usize, scale: usize) -> usize {
    (full * scale).div_ceil(FULL_SCALE).clamp(1, full)
}

pub struct Criterion {
    pub name: &'static str,
    run: fn(usize) -> Outcome,
}

pub const CRITERIA: [Criterion; 15] = [
    Criterion {
        name: "cdp counting formula",
        run: counting,
    },
    Criterion {
        name: "cdp q-enumeration closed form = brute force",
        run: q_identity,
    },
    Criterion {
        name: "three-term formula for w = n",
        run: three_term,
    },
    Criterion {
        name: "cdp rotation CSP",
        run: main_csp,
    },
    Criterion {
        name: "fixed points of k-step rotation",
        run: fixed_lemma,
    },
    Criterion {
        name: "H closed forms = brute force",
        run: h_machinery,
    },
    Criterion {
        name: "binary words under twisted shift",
        run: binary_words,
    },
    Criterion {
        name: "binary-word polynomial, three forms",
        run: bw_forms,
    },
    Criterion {
        name: "Möbius paths: count, CSP, congruence",
        run: mobius_paths,
    },
    Criterion {
        name: "diagonal-avoiding subset CSP",
        run: subset_csp,
    },
    Criterion {
        name: "orbit-count feasibility",
        run: feasibility,
    },
    Criterion {
        name: "Lyndon-like families and parameters",
        run: lyndon_like,
    },
    Criterion {
        name: "Lyndon construction",
        run: construction,
    },
    Criterion {
        name: "inv homomesy",
        run: homomesy,
    },
    Criterion {
        name: "q-Lucas and Carlitz cross-checks",
        run: kernels,
    },
];

fn counting(s: usize) -> Outcome {
    let top = scaled(8, s);
    for n in 1..=top {
        let enumerated = enumerate_cdp(n, n).count();
        let formula = BigInt::from(n + 2) * binomial(2 * n as i64 - 1, n as i64 - 1)
            - (BigInt::from(1) << (2 * n - 1));
        ensure!(
            formula == BigInt::from(enumerated),
            "n = {n}: {enumerated} enumerated, formula {formula}"
        );
        ensure!(cdp_count(n, n) == formula, "n = {n}: closed count differs");
    }
    Ok(format!("n <= {top}"))
}

fn q_identity(s: usize) -> Outcome {
    let top = scaled(6, s);
    for n in 1..=top {
        for w in 1..=n + 2 {
            ensure!(
                cdp_q_closed(n, w) == cdp_q_bruteforce(n, w).map_err(err)?,
                "n = {n}, w = {w}"
            );
        }
    }
    Ok(format!("n <= {top}, w <= n + 2"))
}

fn three_term(s: usize) -> Outcome {
    let top = scaled(7, s);
    for n in 1..=top {
        ensure!(
            cdp_q_three_term(n, n).map_err(err)? == cdp_q_closed(n, n),
            "n = {n}"
        );
    }
    Ok(format!("n <= {top}"))
}

fn main_csp(s: usize) -> Outcome {
    let top = scaled(8, s);
    for n in 1..=top {
        for w in 1..=n {
            let r = verify_cdp_csp(n, w).map_err(err)?;
            ensure!(
                r.passed(),
                "n = {n}, w = {w}: mismatch at k = {:?}",
                r.first_mismatch
            );
        }
    }
    Ok(format!("n <= {top}, w <= n"))
}

fn fixed_lemma(s: usize) -> Outcome {
    let top = scaled(8, s);
    for n in 1..=top {
        for w in 1..=n {
            for k in 1..=n {
                let c = verify_cdp_fixed_lemma(n, w, k).map_err(err)?;
                ensure!(
                    c.holds,
                    "n = {n}, w = {w}, k = {k}: {} vs {}",
                    c.fixed,
                    c.smaller
                );
            }
        }
    }
    Ok(format!("n <= {top}, w <= n, k <= n"))
}

fn h_machinery(s: usize) -> Outcome {
    let top = scaled(5, s);
    let mut configs = 0;
    for n in 1..=top {
        for delta in 2..=7i64 {
            for gamma in 1..delta {
                for ell in 0..=4 {
                    for side in [Side::Left, Side::Right] {
                        let (a, b) = match side {
                            Side::Right => (gamma, gamma - delta),
                            Side::Left => (gamma - delta, gamma),
                        };
                        let spec = DiagonalSpec::new(
                            (n, n - 1),
                            DiagonalSpec::alternating_list(a, b, ell),
                        );
                        let closed = h_closed(n, gamma, delta, ell, side).map_err(err)?;
                        ensure!(closed == h_bruteforce(&spec).map_err(err)?, "{spec:?}");
                        configs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{configs} configurations, n <= {top}"))
}

fn binary_words(s: usize) -> Outcome {
    let top = scaled(12, s).max(2);
    for n in 2..=top {
        let r = verify_bw_csp(n).map_err(err)?;
        ensure!(
            r.passed(),
            "n = {n}: mismatch at k = {:?}",
            r.first_mismatch
        );
        for row in &r.rows {
            let d = gcd(n, row.k);
            let rule = if (n / d) % 2 == 1 {
                BigInt::from(1) << d
            } else {
                BigInt::from(0)
            };
            ensure!(
                row.fixed_count == rule,
                "n = {n}, k = {}: {} fixed",
                row.k,
                row.fixed_count
            );
        }
    }
    Ok(format!("2 <= n <= {top}"))
}

fn bw_forms(s: usize) -> Outcome {
    let top = scaled(12, s);
    for n in 0..=top {
        let a = bw_q(n, BwForm::A).map_err(err)?;
        ensure!(a == bw_q(n, BwForm::B).map_err(err)?, "n = {n}: A vs B");
        ensure!(a == bw_q(n, BwForm::C).map_err(err)?, "n = {n}: A vs C");
    }
    Ok(format!("n <= {top}"))
}

fn mobius_paths(s: usize) -> Outcome {
    let (count_top, top) = (scaled(12, s), scaled(10, s));
    for n in 1..=count_top {
        ensure!(enumerate_cmp(n).len() == 1 << (n - 1), "n = {n}: count");
    }
    for n in 1..=top {
        for p in [CmpPolynomial::HalfBw, CmpPolynomial::Maj] {
            ensure!(
                verify_cmp_csp(n, p).map_err(err)?.passed(),
                "n = {n}, {p:?}"
            );
        }
        let lhs = mod_cyclic(&(&cmp_q(n) + &cmp_q(n)), n);
        ensure!(
            lhs == mod_cyclic(&bw_q(n, BwForm::B).map_err(err)?, n),
            "n = {n}: congruence"
        );
    }
    Ok(format!("count n <= {count_top}, CSP n <= {top}"))
}

fn subset_csp(s: usize) -> Outcome {
    let (top, bf_top) = (scaled(8, s), scaled(6, s));
    let mut pairs = 0;
    for n in 2..=top {
        for w in (1..n).filter(|&w| gcd(n, w) == 1) {
            let r = verify_avl_csp(n, w).map_err(err)?;
            ensure!(
                r.passed(),
                "n = {n}, w = {w}: mismatch at k = {:?}",
                r.first_mismatch
            );
            pairs += 1;
        }
    }
    for n in 1..=bf_top {
        for w in 1..=n + 1 {
            ensure!(
                avl_q_closed(n, w) == avl_q_bruteforce(n, w),
                "n = {n}, w = {w}: formula"
            );
        }
    }
    Ok(format!("{pairs} coprime pairs, formula n <= {bf_top}"))
}

fn census_matches<T: Ord + Clone + std::fmt::Debug>(
    act: &CyclicAction<T>,
    f: &IntPolynomial,
) -> Result<(), String> {
    let n = act.order();
    let aa = theorem_aa(f, n);
    ensure!(aa.feasible, "infeasible: {:?}", aa.diagnosis);
    let census = act.orbits().census();
    for d in divisors(n) {
        let c = BigInt::from(*census.get(&d).unwrap_or(&0));
        ensure!(aa.orbit_counts.get(&d) == Some(&c), "orbits of size {d}");
    }
    Ok(())
}

fn feasibility(s: usize) -> Outcome {
    for n in 1..=scaled(8, s) {
        for w in 1..=n {
            census_matches(&cdp_action(n, w).map_err(err)?, &cdp_q_closed(n, w))
                .map_err(|e| format!("cdp {n},{w}: {e}"))?;
        }
    }
    for n in 2..=scaled(12, s).max(2) {
        census_matches(
            &bw_action(n).map_err(err)?,
            &bw_q(n, BwForm::A).map_err(err)?,
        )
        .map_err(|e| format!("bw {n}: {e}"))?;
    }
    for n in 1..=scaled(10, s) {
        census_matches(&cmp_action(n).map_err(err)?, &cmp_q(n))
            .map_err(|e| format!("cmp {n}: {e}"))?;
    }
    for n in 2..=scaled(8, s) {
        for w in (1..n).filter(|&w| gcd(n, w) == 1) {
            let f = avl_q_closed(n, w);
            let aa = theorem_aa(&f, n);
            ensure!(aa.feasible, "avl {n},{w}: {:?}", aa.diagnosis);
            let t: Vec<BigInt> = (1..=n)
                .map(|d| aa.orbit_counts.get(&d).cloned().unwrap_or_default())
                .collect();
            let inst = lyndon_construct(&LyndonParameters::from_values(&t).map_err(err)?, n)
                .map_err(err)?;
            ensure!(
                verify_csp(&inst.action, &f).map_err(err)?.passed(),
                "avl {n},{w}: synthesized action"
            );
        }
    }
    Ok("cdp, bw, cmp, avl".into())
}

fn lyndon_like(s: usize) -> Outcome {
    let top = scaled(8, s);
    for fam in [
        Family::CdpFixedW { w: 1 },
        Family::CdpFixedW { w: 2 },
        Family::CdpFixedW { w: 3 },
        Family::KaryWords { k: 2 },
        Family::KaryWords { k: 3 },
    ] {
        let members: Vec<FamilyMember> = (1..=top)
            .map(|n| family_member(fam, n))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        ensure!(lyndon_check(&members).map_err(err)?.lyndon_like, "{fam:?}");
    }
    let p = lyndon_params(&(1..=top).map(|n| BigInt::from(1) << n).collect::<Vec<_>>());
    ensure!(p.valid, "2^n rejected");
    for n in 1..=top {
        let lyn: BigInt = divisors(n)
            .into_iter()
            .map(|d| BigInt::from(mobius(n / d)) << d)
            .sum::<BigInt>()
            / n;
        ensure!(p.t[&n] == lyn, "t_{n}");
    }
    let catalan = lyndon_params(&[1, 2, 5, 14, 42].map(BigInt::from));
    ensure!(!catalan.valid, "Catalan sizes accepted");
    Ok(format!("n <= {top}"))
}

fn construction(s: usize) -> Outcome {
    let top = scaled(8, s);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..20 {
        let t: Vec<BigInt> = (0..top)
            .map(|_| BigInt::from(rng.gen_range(0..=3u32)))
            .collect();
        let params = LyndonParameters::from_values(&t).map_err(err)?;
        let mut members = Vec::new();
        for n in 1..=top {
            let inst = lyndon_construct(&params, n).map_err(err)?;
            let csp = verify_csp(&inst.action, &inst.f).map_err(err)?;
            ensure!(csp.passed(), "trial {trial}, n = {n}");
            let size: usize = divisors(n)
                .into_iter()
                .map(|d| d * t[d - 1].to_usize().unwrap())
                .sum();
            ensure!(inst.action.len() == size, "trial {trial}, n = {n}: size");
            members.push(FamilyMember {
                n,
                size: size.into(),
                f: inst.f,
                csp,
            });
        }
        ensure!(
            lyndon_check(&members).map_err(err)?.lyndon_like,
            "trial {trial}"
        );
    }
    Ok(format!("20 parameter vectors, n <= {top}"))
}

fn homomesy(s: usize) -> Outcome {
    let top = scaled(7, s);
    for n in 1..=top {
        let r = inv_homomesy(n, HomomesyAction::Alpha).map_err(err)?;
        let target = BigInt::from(n * (n + 1) / 2);
        ensure!(r.homomesic && r.global_average == target.into(), "n = {n}");
    }
    let r = inv_homomesy(2, HomomesyAction::Alpha).map_err(err)?;
    ensure!(
        r.orbit_averages
            .iter()
            .all(|o| o.average == BigInt::from(3).into()),
        "n = 2 averages"
    );
    let search = beta_witness_search(scaled(6, s)).map_err(err)?;
    Ok(format!(
        "alpha n <= {top}; two-step rotation: {}",
        search.message
    ))
}

fn kernels(s: usize) -> Outcome {
    let top = scaled(16, s);
    for n in 0..=top as i64 {
        for k in 0..=n {
            let b = q_binomial(n, k);
            for m in 1..=top {
                let idx = RootOfUnityIndex::new(m).map_err(err)?;
                ensure!(
                    q_lucas_eval(n, k, idx) == eval_at_unity(&b, idx),
                    "n = {n}, k = {k}, m = {m}"
                );
            }
        }
    }
    let cat = scaled(7, s);
    for n in 1..=cat {
        ensure!(
            carlitz_q_catalan(n) == dp_q_bruteforce(n),
            "Catalan n = {n}"
        );
    }
    Ok(format!("q-Lucas n, m <= {top}; Catalan n <= {cat}"))
}

fn criterion_payload(index: usize, scale: usize) -> Value {
    let c = &CRITERIA[index - 1];
    let (passed, detail) = match (c.run)(scale) {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    json!({ "index": index, "name": c.name, "passed": passed, "detail": detail })
}

pub fn run(scale: usize, cache: &mut Cache) -> Result<Value, CliError> {
    if scale == 0 || scale > FULL_SCALE {
        return Err(CliError::Usage(format!(
            "--max-n must be in 1..={FULL_SCALE}"
        )));
    }
    let mut criteria = Vec::new();
    for index in 1..=CRITERIA.len() {
        let params: Params = [
            ("index".to_string(), json!(index)),
            ("max_n".to_string(), json!(scale)),
        ]
        .into_iter()
        .collect();
        criteria.push(cache.fetch_or_compute("selftest-criterion", params, || {
            Ok(criterion_payload(index, scale))
        })?);
    }
    let passed = criteria
        .iter()
        .filter(|c| c["passed"] == json!(true))
        .count();
    Ok(
        json!({ "max_n": scale, "passed": passed, "failed": criteria.len() - passed, "criteria": criteria }),
    )
}
