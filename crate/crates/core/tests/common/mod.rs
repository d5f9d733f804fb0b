//! Reference values and independent oracles shared by the integration tests.
//!
//! Nothing here calls into the library's series or root finders.
#![allow(dead_code, clippy::excessive_precision)]

use std::f64::consts::PI;

use hyperbessel::HyperBesselParams;

/// Classical Bessel `J_n(x)` for integer `n` from
/// `J_n(x) = (1/π) ∫_0^π cos(nτ − x sin τ) dτ`, by the trapezoidal rule
/// (the integrand extends to a smooth periodic function, so the rule
/// converges geometrically).
pub fn bessel_j(n: i32, x: f64) -> f64 {
    const N: usize = 400;
    let h = PI / N as f64;
    let g = |t: f64| (n as f64 * t - x * t.sin()).cos();
    let mut s = 0.5 * (g(0.0) + g(PI));
    for k in 1..N {
        s += g(k as f64 * h);
    }
    s * h / PI
}

/// Plain bisection to full double precision; `g(a)` and `g(b)` must differ in sign.
pub fn bisect(g: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut ga = g(a);
    assert!(ga * g(b) < 0.0, "oracle bracket [{a}, {b}] has no sign change");
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let gm = g(m);
        if gm == 0.0 {
            return m;
        }
        if (gm > 0.0) == (ga > 0.0) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// The `n`-th sign change of `g` on a uniform grid of spacing `h` from `start`, bisected.
pub fn nth_root(g: impl Fn(f64) -> f64, n: usize, start: f64, h: f64) -> f64 {
    let mut a = start;
    let mut ga = g(a);
    let mut seen = 0;
    loop {
        let b = a + h;
        let gb = g(b);
        if ga * gb < 0.0 {
            seen += 1;
            if seen == n {
                return bisect(&g, a, b);
            }
        }
        a = b;
        ga = gb;
    }
}

/// `Σ (−1)^n (x/3)^{3n} / (n!)^3`, each term built from scratch.
pub fn d2_zero_alpha_partial_sum(x: f64, terms: usize) -> f64 {
    (0..terms)
        .map(|n| {
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            sign * (x / 3.0).powi(3 * n as i32) / fact.powi(3)
        })
        .sum()
}

pub fn params(alphas: &[f64]) -> HyperBesselParams {
    HyperBesselParams::new(alphas.to_vec()).unwrap()
}

/// Reference values computed once at 40 significant digits with an
/// arbitrary-precision hypergeometric evaluator and frozen here.
#[derive(Debug, Clone, Copy)]
pub struct Reference {
    pub alphas: &'static [f64],
    pub j1: f64,
    pub j2: f64,
    pub gamma1: f64,
    pub lemniscate_starlike: f64,
    pub lemniscate_convex: f64,
    /// Janowski convexity radius for `(A, B) = (1, −1)`.
    pub janowski_convex_full: f64,
    /// Janowski starlikeness radius for `(A, B) = (1/2, 0)`.
    pub janowski_starlike_half: f64,
}

pub const REFERENCES: [Reference; 8] = [
    Reference {
        alphas: &[0.5],
        j1: PI,
        j2: 2.0 * PI,
        gamma1: PI / 2.0,
        lemniscate_starlike: 1.069_838_784_248_320_7,
        lemniscate_convex: 0.602_376_897_476_263_23,
        janowski_convex_full: 0.860_333_589_019_379_76,
        janowski_starlike_half: 1.165_561_185_207_211_3,
    },
    Reference {
        alphas: &[0.0],
        j1: 2.404_825_557_695_772_8,
        j2: 5.520_078_110_286_310_6,
        gamma1: 1.255_783_711_794_593_5,
        lemniscate_starlike: 0.865_097_037_091_556_84,
        lemniscate_convex: 0.489_434_277_482_272_6,
        janowski_convex_full: 0.695_748_660_106_399_73,
        janowski_starlike_half: 0.940_770_563_949_737_35,
    },
    Reference {
        alphas: &[1.0],
        j1: 3.831_705_970_207_512_3,
        j2: 7.015_586_669_815_618_8,
        gamma1: 1.841_183_781_340_659_3,
        lemniscate_starlike: 1.243_569_671_726_971_2,
        lemniscate_convex: 0.697_875_651_980_402_63,
        janowski_convex_full: 1.0,
        janowski_starlike_half: 1.356_602_027_436_328_8,
    },
    Reference {
        alphas: &[-0.7],
        j1: 1.171_454_672_983_769_8,
        j2: 4.371_391_586_085_331_5,
        gamma1: 0.654_856_399_907_223_83,
        lemniscate_starlike: 0.462_424_629_762_471_53,
        lemniscate_convex: 0.264_688_469_059_707_47,
        janowski_convex_full: 0.372_020_542_599_965_81,
        janowski_starlike_half: 0.500_738_943_711_525_64,
    },
    Reference {
        alphas: &[0.0, 0.0],
        j1: 3.153_524_850_649_976_2,
        j2: 6.704_012_421_984_444_6,
        gamma1: 1.927_350_675_874_018_9,
        lemniscate_starlike: 1.499_850_376_994_609_3,
        lemniscate_convex: 0.939_536_786_004_198_04,
        janowski_convex_full: 1.200_396_862_770_096_1,
        janowski_starlike_half: 1.586_493_543_810_063_4,
    },
    Reference {
        alphas: &[0.5, -0.3],
        j1: 3.202_841_032_510_090_7,
        j2: 6.868_902_863_745_420_3,
        gamma1: 1.958_457_187_400_007_2,
        lemniscate_starlike: 1.524_257_582_660_756_9,
        lemniscate_convex: 0.954_893_401_228_149_3,
        janowski_convex_full: 1.219_956_311_831_914_1,
        janowski_starlike_half: 1.612_275_384_183_695_5,
    },
    Reference {
        alphas: &[1.0, 0.25, -0.5],
        j1: 4.301_296_361_043_480_7,
        j2: 8.966_735_099_220_895_2,
        gamma1: 2.844_674_602_407_448_6,
        lemniscate_starlike: 2.347_454_331_093_251_8,
        lemniscate_convex: 1.567_009_646_398_895_8,
        janowski_convex_full: 1.895_312_094_699_033_4,
        janowski_starlike_half: 2.449_957_327_544_281,
    },
    Reference {
        alphas: &[0.2, 1.5, -0.9, 3.0],
        j1: 5.200_690_076_988_318_2,
        j2: 12.603_994_621_395_685,
        gamma1: 3.627_056_133_698_977_4,
        lemniscate_starlike: 3.102_599_030_238_129_2,
        lemniscate_convex: 2.167_550_239_132_235_8,
        janowski_convex_full: 2.533_149_723_315_203_2,
        janowski_starlike_half: 3.211_752_106_337_4,
    },
];

/// Far zeros frozen from the same evaluator: `(alphas, n, j_n)`.
pub const FAR_ZEROS: [(&[f64], usize, f64); 7] = [
    (&[0.0], 50, 156.295_034_268_533_52),
    (&[0.0], 100, 313.374_266_077_527_84),
    (&[0.0], 200, 627.533_331_746_904_23),
    (&[0.0, 0.0], 25, 90.089_089_000_731_104),
    (&[0.0, 0.0], 50, 180.777_185_625_760_88),
    (&[0.0, 0.0], 100, 362.156_194_742_683_62),
    (&[0.0, 0.0], 200, 724.915_606_046_406_76),
];
