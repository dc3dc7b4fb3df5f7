use std::fs;

use lklab::dimacs::{load_instance, save_instance, FamilySpec};
use lklab::export::{write_coloring_csv, write_map_csv};
use lklab::LabError;
use lklab_core::coloring::{kneser_coloring, Coloring};
use lklab_core::graphs::{build_kneser, build_local_complete, build_local_kneser};
use lklab_core::homkit::min_star_map;

#[test]
fn instances_survive_a_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for g in [
        build_kneser(6, 2).unwrap(),
        build_local_complete(5, 3).unwrap(),
        build_local_kneser(6, 5, 2).unwrap(),
    ] {
        let prefix = dir
            .path()
            .join(FamilySpec::of(&g).to_string().replace(' ', "_"));
        let (graph_path, _) = save_instance(&g, &prefix).unwrap();
        let back = load_instance(&graph_path, None).unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn custom_graphs_need_no_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.dimacs");
    fs::write(
        &path,
        "c a five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n",
    )
    .unwrap();
    let g = load_instance(&path, None).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (5, 5));
    assert!(g.adjacent(0, 4));
}

#[test]
fn family_mismatches_are_schema_errors() {
    let dir = tempfile::tempdir().unwrap();
    let g = build_local_kneser(4, 3, 1).unwrap();
    let (graph_path, labels_path) = save_instance(&g, &dir.path().join("g")).unwrap();

    // drop one edge and fix the header count
    let text = fs::read_to_string(&graph_path).unwrap();
    let edges = g.edge_count();
    let mut lines: Vec<&str> = text.lines().collect();
    lines.pop();
    let header = format!("p edge 12 {}", edges - 1);
    lines[1] = &header;
    let broken = dir.path().join("broken.dimacs");
    fs::write(&broken, lines.join("\n")).unwrap();
    fs::copy(&labels_path, dir.path().join("broken.labels")).unwrap();
    assert!(matches!(
        load_instance(&broken, None),
        Err(LabError::Schema { .. })
    ));

    // swap two labels
    let text = fs::read_to_string(&labels_path).unwrap();
    let mut rows: Vec<String> = text.lines().map(str::to_string).collect();
    let tail = |s: &str| s.split_once('\t').unwrap().1.to_string();
    let (first, second) = (tail(&rows[0]), tail(&rows[1]));
    rows[0] = format!("1\t{second}");
    rows[1] = format!("2\t{first}");
    let swapped = dir.path().join("swapped.labels");
    fs::write(&swapped, rows.join("\n")).unwrap();
    match load_instance(&graph_path, Some(&swapped)) {
        Err(LabError::Schema { line, .. }) => assert_eq!(line, 1),
        other => panic!("{other:?}"),
    }

    // too few labels
    let short = dir.path().join("short.labels");
    fs::write(&short, text.lines().take(3).collect::<Vec<_>>().join("\n")).unwrap();
    assert!(matches!(
        load_instance(&graph_path, Some(&short)),
        Err(LabError::Schema { .. })
    ));

    // missing sidecar
    fs::remove_file(&labels_path).unwrap();
    let err = load_instance(&graph_path, None).unwrap_err();
    assert!(matches!(err, LabError::Io { .. }));
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn coloring_csv_reads_back() {
    let g = build_kneser(5, 2).unwrap();
    let c = kneser_coloring(&g).unwrap();
    let mut buf = Vec::new();
    write_coloring_csv(&g, &c, &mut buf).unwrap();
    let mut reader = csv::Reader::from_reader(buf.as_slice());
    let mut colors = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row.unwrap();
        assert_eq!(row[0].parse::<usize>().unwrap(), i + 1);
        assert_eq!(row[1], g.labels()[i].a.to_string());
        assert_eq!(&row[2], "{}");
        colors.push(row[3].parse::<u32>().unwrap());
    }
    assert_eq!(Coloring::new(colors), c);

    let short = Coloring::new(vec![1, 2]);
    assert!(write_coloring_csv(&g, &short, Vec::new()).is_err());
}

#[test]
fn map_csv_lists_every_domain_vertex() {
    let h = min_star_map(5, 5, 2).unwrap();
    let mut buf = Vec::new();
    write_map_csv(&h, &mut buf).unwrap();
    let mut reader = csv::Reader::from_reader(buf.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), h.domain().vertex_count());
    let images = h.images().unwrap();
    for (v, row) in rows.iter().enumerate() {
        assert_eq!(row[2].parse::<usize>().unwrap(), images[v] + 1);
        assert_eq!(row[3], h.codomain().labels()[images[v]].to_string());
    }
}
