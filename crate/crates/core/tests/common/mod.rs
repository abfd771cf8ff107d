#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use redmachine::poly::int;
use redmachine::prelude::*;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_pp<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32) -> PowerProduct {
    random_pp_between(rng, nvars, 0, max_degree)
}

pub fn random_pp_between<R: Rng>(
    rng: &mut R,
    nvars: usize,
    min_degree: u32,
    max_degree: u32,
) -> PowerProduct {
    let degree = rng.gen_range(min_degree..=max_degree);
    let mut e = vec![0u32; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    PowerProduct::new(e)
}

pub fn random_poly<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let terms = (0..n).map(|_| {
            let mut c = rng.gen_range(-3i64..=3);
            if c == 0 {
                c = 1;
            }
            (random_pp(rng, nvars, max_degree), int(c))
        });
        let p = Polynomial::from_terms(nvars, terms.collect::<Vec<_>>()).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// A reduction problem with at most 3 variables, degree at most 3 and at
/// most 3 generators.
pub struct Instance {
    pub g: Polynomial,
    pub basis: Basis,
    pub strategy: Strategy,
}

pub fn random_instance<R: Rng>(rng: &mut R) -> Instance {
    let nvars = rng.gen_range(1..=3);
    let names = ["x", "y", "z"];
    let ring = Ring::new(names[..nvars].iter().copied()).unwrap();
    let kind = *MonomialOrder::ADMISSIBLE.choose(rng).unwrap();
    let nf = rng.gen_range(1..=3);
    // Constants and single terms reduce everything they touch in one step.
    let f: Vec<Polynomial> = (0..nf)
        .map(|_| loop {
            let p = random_poly(rng, nvars, 3, 3);
            if p.total_degree() > Some(0) && p.support().count() >= 2 {
                break p;
            }
        })
        .collect();
    let basis = Basis::new(f, OrderingSpec::new(kind, ring)).unwrap();
    // Retry until some term of g is reducible; irreducible inputs test nothing.
    let mut g = random_poly(rng, nvars, 3, 4);
    for _ in 0..20 {
        if g.support().any(|t| basis.is_reducible(t)) {
            break;
        }
        g = random_poly(rng, nvars, 3, 4);
        g.add_term(
            random_pp_between(rng, nvars, 2, 3),
            int(rng.gen_range(1..=3)),
        );
    }
    let strategy = *[
        Strategy::FirstDivisor,
        Strategy::MaxLpp,
        Strategy::LastDivisor,
    ]
    .choose(rng)
    .unwrap();
    Instance { g, basis, strategy }
}

pub fn all_engines() -> Vec<Engine> {
    vec![
        Engine::Classic,
        Engine::Machine,
        Engine::Cached,
        Engine::Parallel(4),
    ]
}
