#![allow(dead_code)]

use std::collections::BTreeSet;

use mtpkit::{Dataset, Point, Rational};
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` distinct integer points with time in `0..=tmax` and pitch in `0..=pmax`.
pub fn random_dataset(rng: &mut ChaCha8Rng, n: usize, tmax: i64, pmax: i64) -> Dataset {
    assert!(n as i64 <= (tmax + 1) * (pmax + 1));
    let mut pts = BTreeSet::new();
    while pts.len() < n {
        pts.insert([rng.gen_range(0..=tmax), rng.gen_range(0..=pmax)]);
    }
    Dataset::from_int_points(&pts.into_iter().collect::<Vec<_>>()).unwrap()
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// Monophonic line: onsets advance by one or two units, pitches wander in a
/// two-octave range.
pub fn random_melody(rng: &mut ChaCha8Rng, len: usize) -> Dataset {
    let mut t = 0;
    let mut pitch: i64 = 60;
    let mut pts = Vec::with_capacity(len);
    for _ in 0..len {
        pts.push([t, pitch]);
        t += rng.gen_range(1..=2);
        pitch = (pitch + rng.gen_range(-5..=5)).clamp(48, 72);
    }
    Dataset::from_int_points(&pts).unwrap()
}

pub fn transpose(d: &Dataset, dt: i64, dp: i64) -> Dataset {
    map(d, |t, p| (t + dt, p + dp))
}

/// Time reversal over the same span.
pub fn retrograde(d: &Dataset) -> Dataset {
    let (lo, hi) = d.extent(0).unwrap();
    let lo = whole(&lo);
    let hi = whole(&hi);
    map(d, |t, p| (hi + lo - t, p))
}

fn map(d: &Dataset, f: impl Fn(i64, i64) -> (i64, i64)) -> Dataset {
    let pts: Vec<Point> = d
        .iter()
        .map(|q| {
            let (t, p) = f(whole(&q.coords()[0]), whole(&q.coords()[1]));
            Point::from_ints(&[t, p])
        })
        .collect();
    Dataset::new(2, pts).unwrap()
}

fn whole(v: &Rational) -> i64 {
    assert!(v.is_integer());
    v.to_i64().unwrap()
}

/// Three families of four melodies each: a seed melody, a transposition of
/// it, its retrograde and a transposed retrograde.
pub fn synthetic_corpus(seed: u64) -> Vec<(String, String, Dataset)> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for family in 0..3 {
        let base = random_melody(&mut rng, 14);
        let label = format!("family{family}");
        let shift = rng.gen_range(2..=7);
        let variants = [
            base.clone(),
            transpose(&base, 0, shift),
            retrograde(&base),
            transpose(&retrograde(&base), 0, -shift),
        ];
        for (v, d) in variants.into_iter().enumerate() {
            out.push((format!("f{family}v{v}"), label.clone(), d));
        }
    }
    out
}
