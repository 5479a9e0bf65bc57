//! The randomized word sweep must actually exercise the whole string
//! classification: every type tag, and the infinite families well away from
//! their base parameter. Combined with the per-curve equality checks in the
//! acceptance sweep, this makes the twist tables exhaustively tested rather
//! than only hit where random words happen to land.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zigzag_core::curves::{apply_word_curve, basic_curve, decompose_kstrings};
use zigzag_core::suites::random_word;
use zigzag_core::KStringType;

#[test]
fn sweep_covers_every_string_type() {
    let mut seen: BTreeMap<&'static str, (i64, i64, usize)> = BTreeMap::new();
    let mut record = |tag: KStringType, u: i64| {
        let name = match tag {
            KStringType::I => "I",
            KStringType::II => "II",
            KStringType::IIPrime => "II'",
            KStringType::III => "III",
            KStringType::IIIPrime => "III'",
            KStringType::IV => "IV",
            KStringType::IVPrime => "IV'",
            KStringType::V => "V",
            KStringType::VPrime => "V'",
            KStringType::VI => "VI",
            KStringType::VII => "VII",
            KStringType::VIII => "VIII",
            KStringType::IX => "IX",
            KStringType::X => "X",
            KStringType::XI => "XI",
        };
        let e = seen.entry(name).or_insert((i64::MAX, i64::MIN, 0));
        e.0 = e.0.min(u);
        e.1 = e.1.max(u);
        e.2 += 1;
    };
    for m in 2..=4usize {
        let mut rng = ChaCha8Rng::seed_from_u64(2026 + m as u64);
        for _ in 0..200 {
            let w = random_word(m, 8, &mut rng);
            for j in 0..=m {
                let c = apply_word_curve(&w, &basic_curve(m, j)).unwrap();
                for k in 0..=m {
                    for ks in decompose_kstrings(&c, k).unwrap() {
                        record(ks.type_tag, ks.u.unwrap_or(0));
                    }
                }
            }
        }
    }
    for (name, (umin, umax, count)) in &seen {
        println!("type {name:>4}: u in [{umin}, {umax}], {count} occurrences");
    }
    let expect_families = ["I", "II", "II'", "III", "III'"];
    for name in expect_families {
        let (umin, umax, count) = seen.get(name).copied().unwrap_or((0, 0, 0));
        assert!(count > 0, "family {name} never appeared");
        assert!(umin <= -2 && umax >= 2, "family {name} only seen with u in [{umin}, {umax}]");
    }
    for name in ["IV", "IV'", "V", "V'", "VI", "VII", "VIII", "IX", "X", "XI"] {
        assert!(
            seen.get(name).map(|e| e.2).unwrap_or(0) > 0,
            "exceptional type {name} never appeared"
        );
    }
}
