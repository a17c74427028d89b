use lerch::tables::{rows, run_row, TableId};
use serde::Deserialize;

#[derive(Deserialize)]
struct Pinned {
    table: String,
    row: usize,
    tol: f64,
    n: usize,
    kn: usize,
    max_error: f64,
}

#[test]
fn table_sizing_is_pinned() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/sizing.csv");
    let mut reader = csv::Reader::from_path(path).unwrap();
    let mut checked = 0;
    for record in reader.deserialize() {
        let pin: Pinned = record.unwrap();
        let table: TableId = pin.table.parse().unwrap();
        let row = rows(table)[pin.row];
        let got = run_row(&row, pin.tol).unwrap();
        assert_eq!((got.n, got.kn), (pin.n, pin.kn), "{} row {} at {:e}", pin.table, pin.row, pin.tol);
        assert!(got.error <= pin.max_error, "{} row {}: {:e}", pin.table, pin.row, got.error);
        checked += 1;
    }
    assert_eq!(checked, 104);
}
