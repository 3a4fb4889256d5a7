//! Verification suites.
//!
//! Each suite runs a batch of cross-checks between independent routes
//! through the library and reports every failure with a label.  The
//! binary exposes them behind `symhopf verify`, and the acceptance tests
//! run the same functions.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symhopf::cohomology::{self, Block, GatheredMonomial, Profile};
use symhopf::duality::Duality;
use symhopf::f2::{binom_mod2, BitMatrix, F2Sum};
use symhopf::generators::{
    bo_apply_qseq, bo_sw_pairs, feshbach_generators, nakaoka_to_bo, sw_class, sw_component,
    sw_coproduct, sw_degree, sw_indicator, BOMonomial, DicksonPartition,
};
use symhopf::homology::{self, NakaokaMonomial};
use symhopf::invariants::{invariant_cup, scale_quotient, to_invariant, MultiSymPoly};
use symhopf::kudo_araki::{self, AdmissibleSeq};

/// Outcome of one suite: how many checks ran and which failed.
#[derive(Debug)]
pub struct SuiteReport {
    /// Suite name.
    pub suite: &'static str,
    /// Number of checks run.
    pub checks: usize,
    /// Labels of the checks that failed.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport { suite, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    /// Number of checks that passed.
    pub fn passed(&self) -> usize {
        self.checks - self.failures.len()
    }

    /// True when every check passed.
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Ranges for the three suites that sweep bidegrees.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Largest component to sweep.
    pub max_component: u32,
    /// Largest degree (total degree for `oracle`) to sweep.
    pub max_degree: u64,
}

impl Limits {
    /// Default range for `dimensions` and `pairing`.
    pub fn bidegrees() -> Self {
        Limits { max_component: 10, max_degree: 12 }
    }

    /// Default range for `oracle`.
    pub fn oracle() -> Self {
        Limits { max_component: 8, max_degree: 10 }
    }
}

fn seq(entries: &[u32]) -> AdmissibleSeq {
    AdmissibleSeq::new(entries.to_vec())
}

fn block(pairs: &[(u32, u32)], width: u32) -> Block {
    Block::new(Profile::new(pairs.to_vec()), width)
}

fn monomial(blocks: &[Block], unit: u32) -> GatheredMonomial {
    GatheredMonomial::from_blocks(blocks.to_vec(), unit).expect("basis monomial")
}

/// The two basis counts agree in every bidegree of the range, within a
/// minute for the default range.
pub fn dimensions(limits: Limits) -> SuiteReport {
    let mut report = SuiteReport::new("dimensions");
    let start = Instant::now();
    for c in 0..=limits.max_component {
        for d in 0..=limits.max_degree {
            let hom = homology::basis(c, d).len();
            let coh = cohomology::basis(c, d).len();
            report.check(hom == coh, || {
                format!("component {c} degree {d}: homology rank {hom} vs cohomology rank {coh}")
            });
        }
    }
    let elapsed = start.elapsed();
    report.check(elapsed.as_secs() < 60, || {
        format!("dimension sweep took {elapsed:?}, budget is 60s")
    });
    report
}

/// The pairing matrix between the two bases is invertible in every
/// bidegree of the range.
pub fn pairing(limits: Limits) -> SuiteReport {
    let mut report = SuiteReport::new("pairing");
    let mut du = Duality::new();
    for c in 0..=limits.max_component {
        for d in 0..=limits.max_degree {
            let pm = du.matrix(c, d);
            let square = pm.rows().len() == pm.cols().len();
            let ok = square && pm.is_invertible();
            report.check(ok, || {
                format!("component {c} degree {d}: pairing matrix not invertible")
            });
        }
    }
    report
}

/// The matching rule for cup products agrees with the duality oracle on
/// every unordered pair of basis monomials in the range, within ten
/// minutes for the default range.
pub fn oracle(limits: Limits) -> SuiteReport {
    let mut report = SuiteReport::new("oracle");
    let start = Instant::now();
    let mut du = Duality::new();
    for c in 0..=limits.max_component {
        for dx in 0..=limits.max_degree {
            for dy in dx..=(limits.max_degree - dx) {
                let xs = cohomology::basis(c, dx);
                let ys = cohomology::basis(c, dy);
                for (i, x) in xs.iter().enumerate() {
                    let from = if dx == dy { i } else { 0 };
                    for y in &ys[from..] {
                        let direct = cohomology::cup(x, y);
                        let via_oracle = du.cup_oracle(x, y);
                        report.check(direct == via_oracle, || {
                            format!("cup mismatch at {x} . {y}: matching gave {direct}, oracle gave {via_oracle}")
                        });
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    report.check(elapsed.as_secs() < 600, || {
        format!("oracle sweep took {elapsed:?}, budget is 600s")
    });
    report
}

/// Worked product, relation, pairing, and gathering facts on small
/// symmetric groups, frozen from independent hand computation.
pub fn examples() -> SuiteReport {
    let mut report = SuiteReport::new("examples");
    let g11 = GatheredMonomial::generator(1, 1);
    let g12 = GatheredMonomial::generator(1, 2);
    let g21 = GatheredMonomial::generator(2, 1);
    let g11_u2 = monomial(&[block(&[(1, 1)], 1)], 2);

    let sq = cohomology::cup(&g11_u2, &g11_u2);
    report.check(
        sq == F2Sum::singleton(monomial(&[block(&[(1, 2)], 1)], 2)),
        || format!("(g[1,1] o u[2])^2 gave {sq}"),
    );

    let mixed = cohomology::cup(&g11_u2, &g12);
    report.check(
        mixed == F2Sum::singleton(monomial(&[block(&[(1, 2)], 1), block(&[(1, 1)], 1)], 0)),
        || format!("(g[1,1] o u[2]) . g[1,2] gave {mixed}"),
    );

    let two_level = cohomology::cup(&g12, &g21);
    report.check(
        two_level == F2Sum::singleton(monomial(&[block(&[(2, 1), (1, 1)], 1)], 0)),
        || format!("g[1,2] . g[2,1] gave {two_level}"),
    );

    let lone = cohomology::cup(&g11_u2, &g21);
    report.check(lone.is_zero(), || {
        format!("(g[1,1] o u[2]) . g[2,1] should vanish, gave {lone}")
    });

    // The degree-5 relation on six points, by the matching rule and by
    // the duality oracle.
    let x6 = monomial(&[block(&[(2, 1)], 1)], 2);
    let y6 = monomial(&[block(&[(1, 2)], 1), block(&[(1, 1)], 1)], 2);
    let by_matching = cohomology::cup(&x6, &y6);
    report.check(by_matching.is_zero(), || {
        format!("six-point relation by matching gave {by_matching}")
    });
    let mut du = Duality::new();
    let by_oracle = du.cup_oracle(&x6, &y6);
    report.check(by_oracle.is_zero(), || {
        format!("six-point relation by oracle gave {by_oracle}")
    });

    // Pairings of the cube of the spread class on four points.
    let cube = monomial(&[block(&[(1, 3)], 2)], 0);
    let hits = [
        (NakaokaMonomial::from_parts(vec![seq(&[3]); 2], 0), true),
        (NakaokaMonomial::from_parts(vec![seq(&[2, 2])], 0), true),
        (NakaokaMonomial::from_parts(vec![seq(&[2]), seq(&[4])], 0), false),
        (NakaokaMonomial::from_parts(vec![seq(&[1]), seq(&[5])], 0), false),
        (NakaokaMonomial::from_parts(vec![seq(&[6])], 2), false),
    ];
    for (m, want) in hits {
        let got = du.pair(&cube, &m);
        report.check(got == want, || {
            format!("pairing of g[1,2]^3 against {m}: got {got}, want {want}")
        });
    }

    // Gathering across two levels.
    let xg = monomial(&[block(&[(2, 3), (1, 1)], 2)], 0);
    let yg = monomial(&[block(&[(2, 3), (1, 1)], 1)], 0);
    let expected = monomial(&[block(&[(2, 3), (1, 1)], 3)], 0);
    let gathered = cohomology::transfer(&xg, &yg);
    report.check(gathered == F2Sum::singleton(expected.clone()), || {
        format!("gathering gave {gathered}, want {expected}")
    });
    report.check(expected.to_string() == "g[2,3]^3.g[1,6]", || {
        format!("display of the gathered class gave {expected}")
    });

    // Coproduct of the width-2 spread class.
    let want: F2Sum<_> = [
        (g12.clone(), GatheredMonomial::one()),
        (g11.clone(), g11.clone()),
        (GatheredMonomial::one(), g12.clone()),
    ]
    .into_iter()
    .collect();
    let got = cohomology::coproduct(&g12);
    report.check(got == want, || format!("coproduct of g[1,2] gave {}", render_pairs(&got)));

    report
}

fn render_pairs(s: &F2Sum<(GatheredMonomial, GatheredMonomial)>) -> String {
    crate::render::tensor_sum(s)
}

fn coproduct_of_sum(s: &F2Sum<GatheredMonomial>) -> F2Sum<(GatheredMonomial, GatheredMonomial)> {
    let mut out = F2Sum::zero();
    for t in s.iter() {
        out += cohomology::coproduct(t);
    }
    out
}

/// Hopf ring axioms on pseudorandom triples of basis monomials, drawn
/// from a fixed-seed generator so runs are reproducible.
pub fn axioms() -> SuiteReport {
    let mut report = SuiteReport::new("axioms");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5f3c);
    const MAX_COMPONENT: u32 = 8;
    const MAX_DEGREE: u64 = 10;
    const TRIPLES: usize = 1000;

    let pools: Vec<Vec<GatheredMonomial>> = (0..=MAX_COMPONENT)
        .map(|c| (0..=MAX_DEGREE).flat_map(|d| cohomology::basis(c, d)).collect())
        .collect();
    let pick = |rng: &mut ChaCha8Rng, c: u32| {
        let pool = &pools[c as usize];
        pool[rng.gen_range(0..pool.len())].clone()
    };

    for _ in 0..TRIPLES {
        let cy = rng.gen_range(0..=MAX_COMPONENT);
        let cz = rng.gen_range(0..=MAX_COMPONENT - cy);
        let y = pick(&mut rng, cy);
        let z = pick(&mut rng, cz);
        let x = pick(&mut rng, cy + cz);

        // Cup distributes over the transfer product through the coproduct.
        let lhs = cohomology::cup_sum(&F2Sum::singleton(x.clone()), &cohomology::transfer(&y, &z));
        let mut rhs = F2Sum::zero();
        for (x1, x2) in cohomology::coproduct(&x).iter() {
            rhs += cohomology::transfer_sum(&cohomology::cup(x1, &y), &cohomology::cup(x2, &z));
        }
        report.check(lhs == rhs, || {
            format!("distributivity failed at x = {x}, y = {y}, z = {z}")
        });

        // The coproduct respects the transfer product.
        let lhs = coproduct_of_sum(&cohomology::transfer(&y, &z));
        let mut rhs = F2Sum::zero();
        for (y1, y2) in cohomology::coproduct(&y).iter() {
            for (z1, z2) in cohomology::coproduct(&z).iter() {
                for t1 in cohomology::transfer(y1, z1).iter() {
                    for t2 in cohomology::transfer(y2, z2).iter() {
                        rhs.toggle((t1.clone(), t2.clone()));
                    }
                }
            }
        }
        report.check(lhs == rhs, || {
            format!("coproduct of a transfer failed at y = {y}, z = {z}")
        });

        // Coassociativity and cocommutativity.
        let dx = cohomology::coproduct(&x);
        let mut left: F2Sum<(GatheredMonomial, GatheredMonomial, GatheredMonomial)> = F2Sum::zero();
        let mut right = F2Sum::zero();
        for (a, b) in dx.iter() {
            for (a1, a2) in cohomology::coproduct(a).iter() {
                left.toggle((a1.clone(), a2.clone(), b.clone()));
            }
            for (b1, b2) in cohomology::coproduct(b).iter() {
                right.toggle((a.clone(), b1.clone(), b2.clone()));
            }
        }
        report.check(left == right, || format!("coassociativity failed at x = {x}"));
        let flipped: F2Sum<(GatheredMonomial, GatheredMonomial)> =
            dx.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        report.check(dx == flipped, || format!("cocommutativity failed at x = {x}"));

        // Transfer commutes and associates.
        report.check(
            cohomology::transfer(&y, &z) == cohomology::transfer(&z, &y),
            || format!("transfer commutativity failed at y = {y}, z = {z}"),
        );
        report.check(
            cohomology::transfer_sum(&cohomology::transfer(&x, &y), &F2Sum::singleton(z.clone()))
                == cohomology::transfer_sum(&F2Sum::singleton(x.clone()), &cohomology::transfer(&y, &z)),
            || format!("transfer associativity failed at x = {x}, y = {y}, z = {z}"),
        );

        // Cup commutes and associates on a common component.
        let c = rng.gen_range(0..=MAX_COMPONENT);
        let a = pick(&mut rng, c);
        let b = pick(&mut rng, c);
        let w = pick(&mut rng, c);
        report.check(cohomology::cup(&a, &b) == cohomology::cup(&b, &a), || {
            format!("cup commutativity failed at {a} . {b}")
        });
        report.check(
            cohomology::cup_sum(&cohomology::cup(&a, &b), &F2Sum::singleton(w.clone()))
                == cohomology::cup_sum(&F2Sum::singleton(a.clone()), &cohomology::cup(&b, &w)),
            || format!("cup associativity failed at {a} . {b} . {w}"),
        );

        // The unit class is a cup identity.
        let unit = GatheredMonomial::unit(a.component());
        report.check(
            cohomology::cup(&unit, &a) == F2Sum::singleton(a.clone()),
            || format!("unit identity failed at {a}"),
        );
    }
    report
}

/// Rewriting of operation sequences: confluence of the two rewriting
/// orders, weight preservation, and the frozen composition relations.
pub fn adem() -> SuiteReport {
    let mut report = SuiteReport::new("adem");

    // Frozen single steps.
    let frozen: [(u32, u32, &[(u32, u32)]); 3] =
        [(2, 0, &[(0, 1)]), (3, 1, &[(1, 2)]), (6, 0, &[(0, 3)])];
    for (m, n, want) in frozen {
        let got = kudo_araki::adem_step(m, n);
        let want: F2Sum<(u32, u32)> = want.iter().copied().collect();
        report.check(got == want, || format!("rewriting step ({m},{n}) gave {got:?}"));
    }

    // Exhaustive confluence on short sequences.
    let mut stack = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if !prefix.is_empty() {
            let left = kudo_araki::normalize(&prefix);
            let right = kudo_araki::normalize_rightmost(&prefix);
            let w = kudo_araki::seq_weight(&prefix);
            let sound = left
                .iter()
                .all(|s| s.weight() == w && kudo_araki::is_admissible(s.entries()));
            report.check(left == right && sound, || {
                format!("rewriting of {prefix:?} differs between orders or breaks weight")
            });
        }
        if prefix.len() < 4 {
            for e in 0..=6 {
                let mut next = prefix.clone();
                next.push(e);
                stack.push(next);
            }
        }
    }

    // Composites with the squaring operation, derived from rewriting alone.
    for n in 1..=8u32 {
        let even = kudo_araki::normalize(&[2 * n, 0]);
        report.check(
            even == F2Sum::singleton(seq(&[0, n])),
            || format!("q_{}q_0 gave {even}", 2 * n),
        );
        let odd = kudo_araki::normalize(&[2 * n + 1, 0]);
        report.check(odd.is_zero(), || format!("q_{}q_0 gave {odd}", 2 * n + 1));
    }
    report
}

/// Monomials in the spread classes of 2-power width stay linearly
/// independent, so those classes generate polynomial subalgebras.
pub fn subalgebra() -> SuiteReport {
    let mut report = SuiteReport::new("subalgebra");
    const MAX_DEGREE: u64 = 12;
    let mut du = Duality::new();

    for n in 1..=3u32 {
        let comp = 1u32 << n;
        // Generators γ_{l, 2^k} with k + l = n, one for each level l >= 1.
        let gens: Vec<GatheredMonomial> = (0..n)
            .map(|k| GatheredMonomial::generator(n - k, 1 << k))
            .collect();
        let degs: Vec<u64> = gens.iter().map(GatheredMonomial::degree).collect();

        // Odometer over exponent tuples of total degree at most MAX_DEGREE.
        let mut tuples: Vec<Vec<u32>> = vec![Vec::new()];
        for d in &degs {
            let mut next = Vec::new();
            for t in &tuples {
                let used: u64 = t.iter().zip(&degs).map(|(e, g)| u64::from(*e) * g).sum();
                let mut e = 0;
                while used + u64::from(e) * d <= MAX_DEGREE {
                    let mut t2 = t.clone();
                    t2.push(e);
                    next.push(t2);
                    e += 1;
                }
            }
            tuples = next;
        }

        let mut by_degree: std::collections::BTreeMap<u64, Vec<F2Sum<GatheredMonomial>>> =
            std::collections::BTreeMap::new();
        for t in &tuples {
            let mut value = F2Sum::singleton(GatheredMonomial::unit(comp));
            for (e, g) in t.iter().zip(&gens) {
                for _ in 0..*e {
                    value = cohomology::cup_sum(&value, &F2Sum::singleton(g.clone()));
                }
            }
            let d: u64 = t.iter().zip(&degs).map(|(e, g)| u64::from(*e) * g).sum();
            by_degree.entry(d).or_default().push(value);
        }

        for (d, values) in by_degree {
            let hom = homology::basis(comp, d);
            let mut coords = BitMatrix::zeros(values.len(), hom.len());
            for (r, v) in values.iter().enumerate() {
                for (c, m) in hom.iter().enumerate() {
                    let mut bit = false;
                    for x in v.iter() {
                        bit ^= du.pair(x, m);
                    }
                    coords.set(r, c, bit);
                }
            }
            let rank = coords.rank();
            report.check(rank == values.len(), || {
                format!(
                    "component {comp} degree {d}: {} monomials in the width-2^k spread classes have rank {rank}",
                    values.len()
                )
            });
        }
    }
    report
}

/// The ring generators found by restriction to elementary abelian
/// subgroups, with the full table on twelve points.
pub fn feshbach() -> SuiteReport {
    let mut report = SuiteReport::new("feshbach");
    let dp = |t: &[u32]| DicksonPartition::new(t.to_vec());

    let g2 = feshbach_generators(2);
    report.check(g2 == vec![dp(&[1])], || format!("two-point table gave {g2:?}"));

    let g4 = feshbach_generators(4);
    report.check(
        g4 == vec![dp(&[1]), dp(&[0, 1]), dp(&[1, 0])],
        || format!("four-point table gave {g4:?}"),
    );
    if g4.len() == 3 {
        let classes: Vec<GatheredMonomial> = g4.iter().map(|p| p.class(4)).collect();
        let want = vec![
            monomial(&[block(&[(1, 1)], 1)], 2),
            GatheredMonomial::generator(1, 2),
            GatheredMonomial::generator(2, 1),
        ];
        report.check(classes == want, || format!("four-point classes gave {classes:?}"));
    }

    let g12 = feshbach_generators(12);
    let expect = vec![
        dp(&[1]),
        dp(&[3]),
        dp(&[5]),
        dp(&[0, 1]),
        dp(&[1, 0]),
        dp(&[1, 1]),
        dp(&[0, 3]),
        dp(&[1, 2]),
        dp(&[2, 1]),
        dp(&[3, 0]),
        dp(&[0, 0, 1]),
        dp(&[0, 1, 0]),
        dp(&[1, 0, 0]),
    ];
    report.check(g12.len() == 13, || format!("twelve-point table has {} entries", g12.len()));
    report.check(g12 == expect, || format!("twelve-point table gave {g12:?}"));
    for p in &g12 {
        let c = p.class(12);
        report.check(
            c.component() == 12 && c.degree() == p.degree(),
            || format!("class of {p} has bidegree ({}, {})", c.component(), c.degree()),
        );
    }
    report
}

/// Stiefel-Whitney classes of the permutation representations: the
/// homology indicator, its certificate in the cohomology of the
/// infinite orthogonal group, the duality classes, and their coproducts.
pub fn sw() -> SuiteReport {
    let mut report = SuiteReport::new("sw");
    let mut du = Duality::new();

    // Frozen image of a composite operation on the first class.
    let q11 = bo_apply_qseq(&[1, 1], &BOMonomial::b(0));
    let want: F2Sum<BOMonomial> = [
        BOMonomial::b(0).mul(&BOMonomial::b(1)).mul(&BOMonomial::b(1)).mul(&BOMonomial::b(1)),
        BOMonomial::b(0).mul(&BOMonomial::b(0)).mul(&BOMonomial::b(1)).mul(&BOMonomial::b(2)),
        BOMonomial::b(0).mul(&BOMonomial::b(0)).mul(&BOMonomial::b(0)).mul(&BOMonomial::b(3)),
    ]
    .into_iter()
    .collect();
    report.check(q11 == want, || format!("composite operation on b0 gave {q11}"));

    for total in 0..=3u32 {
        for k in 0..=total {
            let l = total - k;
            let m = sw_component(k, l);
            let d = sw_degree(k, l);

            // The support indicator matches the coefficient extracted
            // from the infinite orthogonal group route.
            for mono in homology::basis(m, d) {
                let by_indicator = sw_indicator(&mono);
                let by_bo = bo_sw_pairs(&nakaoka_to_bo(&mono), m, d);
                report.check(by_indicator == by_bo, || {
                    format!("indicator and orthogonal route disagree on {mono}: {by_indicator} vs {by_bo}")
                });
            }

            // The class realises the indicator as a functional.
            let class = sw_class(k, l, m, &mut du);
            for mono in homology::basis(m, d) {
                let mut got = false;
                for x in class.iter() {
                    got ^= du.pair(x, &mono);
                }
                report.check(got == sw_indicator(&mono), || {
                    format!("w({k},{l}) pairs wrongly against {mono}")
                });
            }

            // The generation pairing: the class hits the canonical
            // transfer power of the depth-l generator.
            let target = if l == 0 {
                NakaokaMonomial::iota_power(1 << k)
            } else {
                NakaokaMonomial::from_parts(vec![seq(&vec![1; l as usize]); 1 << k], 0)
            };
            let mut hit = false;
            for x in class.iter() {
                hit ^= du.pair(x, &target);
            }
            report.check(hit, || format!("w({k},{l}) misses its generation target {target}"));

            // Coproduct through splittings agrees with the Hopf ring
            // coproduct of the class.
            if total > 0 {
                let via_splittings = sw_coproduct(k, l, &mut du);
                let mut direct = F2Sum::zero();
                for x in class.iter() {
                    direct += cohomology::coproduct(x);
                }
                report.check(via_splittings == direct, || {
                    format!("coproduct of w({k},{l}) differs between routes")
                });
            }
        }
    }
    report
}

/// The invariant-theoretic model: the quartic relation, the degreewise
/// embedding, the ring map, and the scale quotients.
pub fn invariants() -> SuiteReport {
    let mut report = SuiteReport::new("invariants");

    // Quartic relation between the two Dickson families on two points.
    let one1 = MultiSymPoly::one(2, 1);
    let s11 = MultiSymPoly::orbit_product(2, 1, 1);
    let s21 = MultiSymPoly::orbit_product(2, 1, 2);
    let a = s11.mul(&s21).shuffle_product(&one1);
    let b = s11.shuffle_product(&one1);
    let c = s21.shuffle_product(&one1);
    let d = MultiSymPoly::orbit_product(2, 2, 1);
    let e = MultiSymPoly::orbit_product(2, 2, 2);
    let quartic = a
        .mul(&a)
        .add(&a.mul(&b).mul(&c))
        .add(&d.mul(&c.mul(&c)))
        .add(&b.mul(&b).mul(&e));
    report.check(quartic.is_zero(), || format!("quartic relation gave {quartic}"));

    // Degreewise embedding into sums of proper set monomials.
    for m in 0..=6u32 {
        for deg in 0..=8u64 {
            let bas = cohomology::basis(m, deg);
            let images: Vec<_> = bas.iter().map(to_invariant).collect();
            for (x, img) in bas.iter().zip(&images) {
                report.check(!img.is_zero(), || format!("image of {x} vanished"));
                report.check(
                    img.iter().all(|t| t.is_proper()),
                    || format!("image of {x} has an improper term"),
                );
            }
            let distinct: std::collections::BTreeSet<_> =
                images.iter().map(|i| format!("{i}")).collect();
            report.check(distinct.len() == images.len(), || {
                format!("images collide on component {m} degree {deg}")
            });
        }
    }

    // Ring map: products transport to products of invariants.
    for m in 0..=6u32 {
        for dx in 0..=6u64 {
            for dy in dx..=(6 - dx) {
                let xs = cohomology::basis(m, dx);
                let ys = cohomology::basis(m, dy);
                for (i, x) in xs.iter().enumerate() {
                    let from = if dx == dy { i } else { 0 };
                    for y in &ys[from..] {
                        let mut of_cup = F2Sum::zero();
                        for t in cohomology::cup(x, y).iter() {
                            of_cup += to_invariant(t);
                        }
                        let of_images = invariant_cup(&to_invariant(x), &to_invariant(y));
                        report.check(of_cup == of_images, || {
                            format!("ring map fails at {x} . {y}")
                        });
                    }
                }
            }
        }
    }

    // Shuffle products obey the same digit rule as the transfer.
    for a_w in 1..=5u32 {
        for b_w in 1..=5u32 {
            let sa = MultiSymPoly::orbit_product(1, a_w, 1);
            let sb = MultiSymPoly::orbit_product(1, b_w, 1);
            let sh = sa.shuffle_product(&sb);
            let odd = binom_mod2(u64::from(a_w + b_w), u64::from(a_w));
            let want = if odd {
                MultiSymPoly::orbit_product(1, a_w + b_w, 1)
            } else {
                MultiSymPoly::zero(1, a_w + b_w)
            };
            report.check(sh == want, || {
                format!("shuffle of widths {a_w} and {b_w} gave {sh}")
            });
        }
    }

    // Scale quotients turn the transfer into the shuffle product.
    for k in 1..=2u32 {
        for l in 1..=k {
            for a_n in 1..=2u32 {
                for b_n in 1..=2u32 {
                    let x = GatheredMonomial::generator(l, a_n << (k - l));
                    let y = GatheredMonomial::generator(l, b_n << (k - l));
                    let mut lhs = MultiSymPoly::zero(k, (x.component() + y.component()) >> k);
                    for t in cohomology::transfer(&x, &y).iter() {
                        lhs = lhs.add(&scale_quotient(t, k));
                    }
                    let rhs = scale_quotient(&x, k).shuffle_product(&scale_quotient(&y, k));
                    report.check(lhs == rhs, || {
                        format!("scale quotient breaks the transfer at {x} o {y} (k = {k})")
                    });
                }
            }
            // Units pass to empty-variable units.
            let u = GatheredMonomial::unit(3 << k);
            report.check(
                scale_quotient(&u, k) == MultiSymPoly::one(k, 3),
                || format!("scale quotient of u[{}] is wrong", 3 << k),
            );

            // Scale quotients turn the coproduct into variable decoupling.
            for n in 2..=3u32 {
                let g = GatheredMonomial::generator(l, n << (k - l));
                let img = scale_quotient(&g, k);
                let vars = img.vars();
                for va in 0..=vars {
                    let vb = vars - va;
                    let pieces = img.decouple_coproduct(va, vb);
                    let left = if va == 0 {
                        MultiSymPoly::one(k, 0)
                    } else {
                        MultiSymPoly::orbit_product(k, va, l)
                    };
                    let right = if vb == 0 {
                        MultiSymPoly::one(k, 0)
                    } else {
                        MultiSymPoly::orbit_product(k, vb, l)
                    };
                    let ok = pieces.len() == 1 && pieces[0].0 == left && pieces[0].1 == right;
                    report.check(ok, || {
                        format!("decoupling of {g} at split ({va},{vb}) gave {} pieces", pieces.len())
                    });
                }
            }
        }
    }
    report
}

/// Run every suite at its default range.
pub fn all() -> Vec<SuiteReport> {
    vec![
        dimensions(Limits::bidegrees()),
        pairing(Limits::bidegrees()),
        oracle(Limits::oracle()),
        examples(),
        axioms(),
        adem(),
        subalgebra(),
        feshbach(),
        sw(),
        invariants(),
    ]
}

/// Look up a suite by name, honouring range overrides where they apply.
pub fn by_name(name: &str, limits_bidegrees: Limits, limits_oracle: Limits) -> Option<Vec<SuiteReport>> {
    let one = |r: SuiteReport| Some(vec![r]);
    match name {
        "dimensions" => one(dimensions(limits_bidegrees)),
        "pairing" => one(pairing(limits_bidegrees)),
        "oracle" => one(oracle(limits_oracle)),
        "examples" => one(examples()),
        "axioms" => one(axioms()),
        "adem" => one(adem()),
        "subalgebra" => one(subalgebra()),
        "feshbach" => one(feshbach()),
        "sw" => one(sw()),
        "invariants" => one(invariants()),
        "all" => Some(all()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for r in [examples(), adem(), feshbach()] {
            assert!(r.ok(), "{}: {:?}", r.suite, r.failures);
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(by_name("nope", Limits::bidegrees(), Limits::oracle()).is_none());
    }
}
