use std::fs;
use std::path::Path;
use std::time::Instant;

use circlust::analysis::evenly_spaced_centers;
use circlust::bioseq::{dna_to_polar, parse_fasta};
use circlust::search::Pattern;
use circlust::{
    circular_dbscan, circular_hierarchical, circular_kmeans, cophenetic_correlation, cut_dendrogram,
    generate_synthetic, sequence_dendrogram, DbscanConfig, Dendrogram, KMeansConfig,
    ReconstructionParams, SyntheticSpec,
};
use serde::Serialize;

use crate::args::{DbscanArgs, DnaArgs, GenerateArgs, HierArgs, InputArgs, KmeansArgs, PlotArgs, PlotKind};
use crate::error::{CliError, Result};
use crate::plot;
use crate::report::{InputInfo, Report};
use crate::table::{self, read_merges, read_table, write_file, write_labeled, PointTable};

fn prepare_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

fn load(common: &InputArgs) -> Result<(PointTable, InputInfo)> {
    let table = read_table(&common.input, common.degrees)?;
    let info = InputInfo::new(&common.input, table.points.len(), common.degrees)?;
    prepare_dir(&common.out_dir)?;
    Ok((table, info))
}

fn elapsed(timing: bool, start: Instant) -> Option<std::time::Duration> {
    timing.then(|| start.elapsed())
}

#[derive(Serialize)]
struct KmeansParams {
    radius: f64,
    repetitions: usize,
    k: usize,
    seed: u64,
    restarts: usize,
    max_iter: usize,
}

#[derive(Serialize)]
struct KmeansOutcome {
    labels: Vec<i64>,
    n_clusters: usize,
    sse: f64,
    repetitions_used: usize,
    chosen_period: usize,
    chosen_combination: Vec<usize>,
}

pub fn kmeans(args: &KmeansArgs) -> Result<()> {
    let start = Instant::now();
    let common = &args.common;
    let (table, info) = load(common)?;
    let params = ReconstructionParams::new(common.radius, args.c)?;
    let cfg = KMeansConfig {
        k: args.k,
        max_iter: args.max_iter,
        n_restarts: args.restarts,
        seed: args.seed,
    };
    let res = circular_kmeans(&table.points, &params, &cfg)?;
    let labels = res.labeling.labels().to_vec();
    write_labeled(&common.out_dir.join("labels.csv"), &table, &labels)?;
    let report = Report::new(
        "kmeans",
        info,
        KmeansParams {
            radius: common.radius,
            repetitions: args.c,
            k: args.k,
            seed: args.seed,
            restarts: args.restarts,
            max_iter: args.max_iter,
        },
        KmeansOutcome {
            n_clusters: res.labeling.n_clusters(),
            labels,
            sse: res.sse,
            repetitions_used: res.c_used,
            chosen_period: res.chosen_period,
            chosen_combination: res.chosen_combination,
        },
    );
    report
        .with_timing(elapsed(common.timing, start))
        .write(&common.out_dir.join("report.toml"))
}

#[derive(Serialize)]
struct DbscanParams {
    radius: f64,
    repetitions: usize,
    eps: f64,
    min_pts: usize,
    min_repetitions: usize,
}

#[derive(Serialize)]
struct PatternRow {
    members: Vec<usize>,
    repetitions: usize,
}

impl From<&Pattern> for PatternRow {
    fn from(p: &Pattern) -> Self {
        Self {
            members: p.members.clone(),
            repetitions: p.repetitions,
        }
    }
}

#[derive(Serialize)]
struct DbscanOutcome {
    labels: Vec<i64>,
    n_clusters: usize,
    n_outliers: usize,
    retained: Vec<PatternRow>,
}

pub fn dbscan(args: &DbscanArgs) -> Result<()> {
    let start = Instant::now();
    let common = &args.common;
    let (table, info) = load(common)?;
    let params = ReconstructionParams::new(common.radius, args.c)?;
    let cfg = DbscanConfig::new(args.eps, args.min_pts)?;
    let y = args.min_repetitions.unwrap_or(args.c + 1);
    let res = circular_dbscan(&table.points, &cfg, &params, y)?;
    let labels = res.labeling.labels().to_vec();
    write_labeled(&common.out_dir.join("labels.csv"), &table, &labels)?;
    let report = Report::new(
        "dbscan",
        info,
        DbscanParams {
            radius: common.radius,
            repetitions: args.c,
            eps: args.eps,
            min_pts: args.min_pts,
            min_repetitions: y,
        },
        DbscanOutcome {
            n_clusters: res.labeling.n_clusters(),
            n_outliers: res.labeling.n_outliers(),
            labels,
            retained: res.retained_patterns.iter().map(PatternRow::from).collect(),
        },
    );
    report
        .with_timing(elapsed(common.timing, start))
        .write(&common.out_dir.join("report.toml"))
}

#[derive(Serialize)]
struct HierParams {
    radius: f64,
    repetitions: usize,
    linkage: String,
    k: usize,
}

#[derive(Serialize)]
struct HierOutcome {
    labels: Vec<i64>,
    heights: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    newick: Option<String>,
}

fn write_tree(dir: &Path, stem: &str, d: &Dendrogram, newick: bool) -> Result<Option<String>> {
    write_file(&dir.join(format!("{stem}.csv")), &table::merge_list(d))?;
    if !newick {
        return Ok(None);
    }
    let text = d.to_newick(None);
    write_file(&dir.join(format!("{stem}.nwk")), &format!("{text}\n"))?;
    Ok(Some(text))
}

pub fn hier(args: &HierArgs) -> Result<()> {
    let start = Instant::now();
    let common = &args.common;
    let (table, info) = load(common)?;
    let params = ReconstructionParams::new(common.radius, args.c)?;
    let tree = circular_hierarchical(&table.points, &params, args.linkage)?;
    let labels = cut_dendrogram(&tree, args.k)?.labels().to_vec();
    write_labeled(&common.out_dir.join("labels.csv"), &table, &labels)?;
    let newick = write_tree(&common.out_dir, "merges", &tree, args.newick)?;
    let report = Report::new(
        "hier",
        info,
        HierParams {
            radius: common.radius,
            repetitions: args.c,
            linkage: args.linkage.to_string(),
            k: args.k,
        },
        HierOutcome {
            labels,
            heights: tree.heights().collect(),
            newick,
        },
    );
    report
        .with_timing(elapsed(common.timing, start))
        .write(&common.out_dir.join("report.toml"))
}

pub fn generate(args: &GenerateArgs) -> Result<()> {
    if args.classes == 0 {
        return Err(CliError::validation("--classes must be positive"));
    }
    let spec = SyntheticSpec {
        n_points: args.n,
        n_classes: args.classes,
        class_centers: evenly_spaced_centers(args.classes, args.offset),
        angular_spread: args.angular_spread,
        radial_spread: args.radial_spread,
        base_radius: args.base_radius,
        seed: args.seed,
    };
    let (points, truth) = generate_synthetic(&spec)?;
    table::write_points(&args.output, &points, truth.labels())
}

#[derive(Serialize)]
struct DnaParams {
    radius: f64,
    repetitions: usize,
    linkage: String,
}

#[derive(Serialize)]
struct DnaOutcome {
    sequences: Vec<String>,
    lengths: Vec<usize>,
    /// Row-major pairwise cophenetic correlations; empty for one sequence.
    cophenetic: Vec<Vec<f64>>,
}

/// Replaces characters that are awkward in file names.
fn file_stem(id: &str) -> String {
    id.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

pub fn dna(args: &DnaArgs) -> Result<()> {
    let start = Instant::now();
    let file = fs::File::open(&args.input).map_err(|e| CliError::io(&args.input, e))?;
    let seqs = parse_fasta(std::io::BufReader::new(file)).map_err(|e| match e {
        circlust::Error::Fasta { .. } => CliError::validation(format!("{}: {e}", args.input.display())),
        other => other.into(),
    })?;
    if seqs.is_empty() {
        return Err(CliError::validation(format!("{}: no sequences", args.input.display())));
    }
    prepare_dir(&args.out_dir)?;
    let params = ReconstructionParams::new(args.radius, args.c)?;

    let mut trees = Vec::with_capacity(seqs.len());
    for seq in &seqs {
        let stem = file_stem(seq.id());
        write_file(&args.out_dir.join(format!("{stem}.profile.csv")), &dna_to_polar(seq).to_table())?;
        let tree = sequence_dendrogram(seq, &params, args.linkage)?;
        write_tree(&args.out_dir, &format!("{stem}.merges"), &tree, args.newick)?;
        trees.push(tree);
    }

    let mut matrix = Vec::new();
    if trees.len() >= 2 {
        for a in &trees {
            let row = trees
                .iter()
                .map(|b| cophenetic_correlation(a, b))
                .collect::<circlust::Result<Vec<f64>>>()?;
            matrix.push(row);
        }
        let mut csv = String::from("id");
        for s in &seqs {
            csv.push(',');
            csv.push_str(s.id());
        }
        csv.push('\n');
        for (s, row) in seqs.iter().zip(&matrix) {
            csv.push_str(s.id());
            for v in row {
                csv.push_str(&format!(",{v}"));
            }
            csv.push('\n');
        }
        write_file(&args.out_dir.join("cophenetic.csv"), &csv)?;
    }

    let info = InputInfo::new(&args.input, seqs.len(), false)?;
    let report = Report::new(
        "dna",
        info,
        DnaParams {
            radius: args.radius,
            repetitions: args.c,
            linkage: args.linkage.to_string(),
        },
        DnaOutcome {
            sequences: seqs.iter().map(|s| s.id().to_string()).collect(),
            lengths: seqs.iter().map(|s| s.len()).collect(),
            cophenetic: matrix,
        },
    );
    report
        .with_timing(elapsed(args.timing, start))
        .write(&args.out_dir.join("report.toml"))
}

fn looks_like_merge_list(path: &Path) -> Result<bool> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    Ok(first.split(',').all(|f| f.trim().parse::<f64>().is_ok()) && first.split(',').count() == 3)
}

pub fn plot(args: &PlotArgs) -> Result<()> {
    let merge_input = looks_like_merge_list(&args.input)?;
    let svg = match args.kind {
        PlotKind::Dendrogram => {
            if !merge_input {
                return Err(CliError::validation(format!(
                    "{}: dendrogram plots need a headerless merge list",
                    args.input.display()
                )));
            }
            let merges = read_merges(&args.input)?;
            let tree = Dendrogram::from_merge_list(merges.len() + 1, &merges)?;
            plot::dendrogram(&tree, None)
        }
        PlotKind::PolarScatter | PlotKind::PlaneScatter => {
            if merge_input {
                return Err(CliError::validation(format!(
                    "{}: scatter plots need a point table, got a merge list",
                    args.input.display()
                )));
            }
            let table = read_table(&args.input, args.degrees)?;
            let labels = table.labels(&[table::CLUSTER_COLUMN, "label"])?.ok_or_else(|| {
                CliError::validation(format!(
                    "{}: scatter plots need a 'cluster' or 'label' column",
                    args.input.display()
                ))
            })?;
            if args.kind == PlotKind::PolarScatter {
                plot::polar_scatter(&table.points, &labels)
            } else {
                let params = ReconstructionParams::new(args.radius, args.c)?;
                plot::plane_scatter(&table.points, &labels, &params)
            }
        }
    };
    if let Some(dir) = args.output.parent().filter(|d| !d.as_os_str().is_empty()) {
        prepare_dir(dir)?;
    }
    write_file(&args.output, &svg)
}

