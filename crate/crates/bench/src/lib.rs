//! Shared inputs for the benchmarks in `benches/`.

use cartan_limits::limits::{random_table_instance, TableInstance};
use cartan_limits::LimitClass;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `per_row` seeded instances of each table row, rows in order.
pub fn instances(per_row: usize, seed: u64) -> Vec<TableInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    LimitClass::ALL
        .iter()
        .flat_map(|&row| {
            (0..per_row)
                .map(|_| random_table_instance(row, &mut rng))
                .collect::<Vec<_>>()
        })
        .collect()
}
