use std::time::Instant;
use itg_core::profile::profile_st;
use itg_core::reductions::gen_random_temporal;

fn main() {
    let records: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1_000_000);
    let n: u32 = std::env::args().nth(2).and_then(|a| a.parse().ok()).unwrap_or((records / 10) as u32);
    let tmax: i64 = std::env::args().nth(3).and_then(|a| a.parse().ok()).unwrap_or(2 * records as i64);
    let g = gen_random_temporal(n, records, tmax, true, 44).unwrap();
    let t0 = Instant::now();
    let pr = profile_st(&g, 1, 2).unwrap();
    println!("records={records} n={n} tmax={tmax} sweep: {:?} ({} triples)", t0.elapsed(), pr.triples().len());
}
