use std::process::Command;

use weilauth::parallel::{self, Pool};
use weilauth::render;
use weilauth_core::authcode::CodeParams;
use weilauth_core::field::make_field;
use weilauth_core::Caps;

fn code(p: u64, n: usize, r: u64) -> CodeParams {
    CodeParams::new(make_field(p, n, None).unwrap(), r).unwrap()
}

/// Every scan serialized to a string, for one worker count.
fn snapshot(jobs: usize) -> String {
    let pool = Pool::new(Some(jobs)).unwrap();
    assert_eq!(pool.threads(), jobs);
    let mut out = String::new();
    for (p, n, r) in [(3, 4, 1), (3, 5, 2), (5, 3, 1), (7, 2, 2)] {
        let c = code(p, n, r);
        out += &format!("{:?}\n", parallel::pi_scan(&pool, &c, 1 << 20).unwrap());
        out += &format!("{:?}\n", parallel::ps_scan(&pool, &c, 1 << 20).unwrap());
        out += &format!("{:?}\n", parallel::message_distribution(&pool, &c, 1 << 20).unwrap().histogram());
        out += &format!("{:?}\n", parallel::message_distribution_by_encoding(&pool, &c, 1 << 20).unwrap());
    }
    out += &format!("{:?}\n", parallel::h_e_given_mm(&pool, &code(3, 4, 1), 81).unwrap().to_bits());
    let f = make_field(3, 4, None).unwrap();
    out += &format!("{:?}\n", parallel::weil_table(&pool, &f, 1, 1 << 20).unwrap());
    let rows = parallel::optimality_report(&pool, 3, 1, 2..=6, &Caps::default()).unwrap();
    out += &render::report_csv(&rows).unwrap();
    out
}

#[test]
fn scans_do_not_depend_on_worker_count() {
    let one = snapshot(1);
    assert_eq!(one, snapshot(2));
    assert_eq!(one, snapshot(8));
}

#[test]
fn cli_output_is_byte_identical() {
    let commands: [&[&str]; 5] = [
        &["pi", "--p", "3", "--n", "5", "--r", "2", "--method", "both", "--no-timing"],
        &["ps", "--p", "3", "--n", "4", "--r", "2", "--method", "both", "--no-timing"],
        &["entropy", "--p", "3", "--n", "4", "--r", "1", "--method", "both", "--no-timing"],
        &["report", "--p", "3", "--r", "1", "--n-from", "2", "--n-to", "6", "--format", "csv"],
        &["report", "--p", "5", "--r", "1", "--n-from", "1", "--n-to", "3", "--no-timing"],
    ];
    for args in commands {
        let outputs: Vec<Vec<u8>> = ["1", "2", "8"]
            .iter()
            .map(|jobs| {
                let out =
                    Command::new(env!("CARGO_BIN_EXE_weilauth")).args(args).args(["--jobs", jobs]).output().unwrap();
                assert_eq!(out.status.code(), Some(0));
                out.stdout
            })
            .collect();
        assert_eq!(outputs[0], outputs[1], "{args:?}");
        assert_eq!(outputs[0], outputs[2], "{args:?}");
    }
}
