use giantqed::export::{to_csv, to_json_lines, write_series, Format};
use giantqed::integrator::TimeSeries;
use giantqed::observables::Observable;
use giantqed::Error;

fn series() -> TimeSeries {
    TimeSeries::from_columns(
        vec![0.0, 0.5, 1.0],
        vec![
            (Observable::Rr, vec![1.0, 0.1 + 0.2, std::f64::consts::PI * 1e-7]),
            (Observable::G2, vec![1.0, f64::NAN, 2.0 / 3.0]),
        ],
    )
    .unwrap()
}

#[test]
fn csv_layout() {
    let csv = to_csv(&series());
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "t_us,rr,g2");
    assert!(lines[2].ends_with(','), "{}", lines[2]);
    assert!(!csv.contains("NaN"));
}

#[test]
fn csv_round_trips_exactly() {
    let s = series();
    let csv = to_csv(&s);
    for (k, line) in csv.lines().skip(1).enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[0].parse::<f64>().unwrap(), s.times()[k]);
        for (j, o) in s.observables().iter().enumerate() {
            let want = s.column(*o).unwrap()[k];
            match cells[j + 1] {
                "" => assert!(want.is_nan()),
                c => assert_eq!(c.parse::<f64>().unwrap().to_bits(), want.to_bits()),
            }
        }
    }
}

#[test]
fn json_lines_mirror_rows() {
    let text = to_json_lines(&series());
    let rows: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1]["g2"].is_null());
    assert_eq!(rows[1]["rr"].as_f64().unwrap(), 0.1 + 0.2);
    assert_eq!(rows[2]["t_us"].as_f64().unwrap(), 1.0);
}

#[test]
fn io_errors_name_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.csv");
    let err = write_series(&path, &series(), Format::Csv).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
    assert!(err.to_string().contains("missing"), "{err}");
}
