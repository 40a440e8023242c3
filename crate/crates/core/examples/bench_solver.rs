use gaoforge_core::*;
use std::time::Instant;

fn main() {
    for n in [24u64, 30, 36, 40] {
        let m = factorize(n).unwrap();
        let w = WeightSet::all_units(&m);
        let t = Instant::now();
        let g = gao_constant(&m, &w, &Budget::default()).unwrap();
        println!("n={n}: E={} nodes={} in {:?}", g.gao, g.stats.nodes, t.elapsed());
    }
}
