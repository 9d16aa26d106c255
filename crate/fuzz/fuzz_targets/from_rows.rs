#![no_main]

use bolnet::LoopTable;
use libfuzzer_sys::fuzz_target;

// First byte picks the order, the rest fills the table row by row.
fuzz_target!(|data: &[u8]| {
    let Some((&n, cells)) = data.split_first() else {
        return;
    };
    let n = (n % 10) as usize;
    if n == 0 || cells.len() < n * n {
        return;
    }
    let rows: Vec<Vec<usize>> = cells[..n * n]
        .chunks(n)
        .map(|row| row.iter().map(|&v| v as usize % (n + 1)).collect())
        .collect();
    for normalize in [false, true] {
        if let Ok(l) = LoopTable::from_rows(&rows, normalize) {
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(l.mul(x, l.ldiv(x, y)), y);
                    assert_eq!(l.mul(l.rdiv(x, y), y), x);
                }
            }
        }
    }
});
