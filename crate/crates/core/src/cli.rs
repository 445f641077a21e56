//! The `mtpkit` command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::encoder::encode_point_set;
use crate::io::{
    parse_dataset, parse_encoding, parse_manifest, serialize_dataset, serialize_encoding,
};
use crate::ncd::{distance_matrix, ncd, nearest_neighbours, NcdConfig};
use crate::scalar::Scalar;
use crate::transform::TransformationClass;
use crate::{Dataset, Rational};

/// Exit status for every failure, including usage errors.
pub const EXIT_FAILURE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "mtpkit",
    version,
    about = "Maximal transformable patterns, point-set compression and NCD classification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Transformation class: 2T, 2TR or 2STR.
    #[arg(long = "class", global = true, default_value = "2T")]
    pub class: TransformationClass,

    /// Smallest MTP size to report or use.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub min_size: u64,

    /// Time gap between the two halves of a pair dataset.
    #[arg(long, global = true, default_value = "1")]
    pub gap: String,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "MTPKIT_JOBS")]
    pub jobs: Option<usize>,

    /// Write the main result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the maximal transformable patterns of a dataset.
    Mtps { dataset: PathBuf },
    /// Compress a dataset into an encoding file.
    Encode { dataset: PathBuf },
    /// Rebuild a dataset from an encoding file.
    Decode { encoding: PathBuf },
    /// Normalized compression distance between two datasets.
    Ncd { first: PathBuf, second: PathBuf },
    /// Leave-one-out 1-NN classification of a labelled corpus.
    Classify { manifest: PathBuf },
}

impl Cli {
    fn ncd_config(&self) -> anyhow::Result<NcdConfig<Rational>> {
        let gap = Rational::parse_exact(&self.gap)
            .with_context(|| format!("invalid --gap '{}'", self.gap))?;
        if !num_traits::Signed::is_positive(&gap) {
            bail!("--gap must be positive, got {gap}");
        }
        Ok(NcdConfig {
            class: self.class,
            min_size: self.min_size as usize,
            gap,
        })
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_dataset(path: &Path) -> anyhow::Result<Dataset> {
    parse_dataset(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn exact<T>(r: &Ratio<T>) -> String
where
    Ratio<T>: ToPrimitive + std::fmt::Display,
{
    let approx = r.to_f64().unwrap_or(f64::NAN);
    format!("{r} ({approx:.4})")
}

/// Runs one command. Results go to `--output` when given and to `out`
/// otherwise; `err` receives secondary information.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<()> {
    let mut primary: Vec<u8> = Vec::new();
    let mut secondary: Vec<u8> = Vec::new();
    match &cli.command {
        Command::Mtps { dataset } => {
            let d = load_dataset(dataset)?;
            let mtps = crate::maximal_transformable_patterns(&d, cli.class, cli.min_size as usize)?;
            for m in &mtps {
                let pts: Vec<String> = m.pattern.iter().map(|p| p.to_string()).collect();
                writeln!(primary, "{} {}", m.transformation, pts.join(" "))?;
            }
            writeln!(primary, "{} MTPs", mtps.len())?;
        }
        Command::Encode { dataset } => {
            let d = load_dataset(dataset)?;
            let e = encode_point_set(&d, cli.class, cli.min_size as usize)?;
            primary.extend(serialize_encoding(&e)?.into_bytes());
            let (dl, ext) = (e.description_length(), e.extensional_length()?);
            let cf = if dl == 0 {
                Ratio::from_integer(1)
            } else {
                Ratio::new(ext as u64, dl as u64)
            };
            let stats = format!("DL={dl} extensional={ext} CF={}", exact(&cf));
            if cli.output.is_some() {
                writeln!(out, "{stats}")?;
            } else {
                writeln!(secondary, "{stats}")?;
            }
        }
        Command::Decode { encoding } => {
            let e = parse_encoding::<Rational>(&read(encoding)?)
                .with_context(|| format!("in {}", encoding.display()))?;
            primary.extend(serialize_dataset(&e.decode()?).into_bytes());
        }
        Command::Ncd { first, second } => {
            let config = cli.ncd_config()?;
            let (a, b) = (load_dataset(first)?, load_dataset(second)?);
            writeln!(primary, "{}", exact(&ncd(&a, &b, &config)?))?;
        }
        Command::Classify { manifest } => {
            let config = cli.ncd_config()?;
            let base = manifest.parent().unwrap_or(Path::new("."));
            let entries = parse_manifest(&read(manifest)?, base)
                .with_context(|| format!("in {}", manifest.display()))?;
            if entries.len() < 2 {
                bail!("a corpus needs at least two items");
            }
            let items = entries
                .iter()
                .map(|e| load_dataset(&e.path))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let analysis = distance_matrix(&items, &config)?;
            let nn = nearest_neighbours(&analysis.matrix.entries);
            let mut hits = 0;
            writeln!(primary, "# item\tlabel\tpredicted\tnearest\tdistance")?;
            for (i, e) in entries.iter().enumerate() {
                let j = nn[i];
                let predicted = &entries[j].label;
                hits += usize::from(*predicted == e.label);
                writeln!(
                    primary,
                    "{}\t{}\t{}\t{}\t{}",
                    e.path.display(),
                    e.label,
                    predicted,
                    entries[j].path.display(),
                    analysis.matrix.get(i, j)
                )?;
            }
            writeln!(primary, "class={}", cli.class)?;
            writeln!(
                primary,
                "success_rate={}",
                exact(&Ratio::new(hits as u64, entries.len() as u64))
            )?;
            writeln!(primary, "mean_cf_corpus={:.4}", analysis.mean_item_cf())?;
            writeln!(primary, "mean_cf_pairs={:.4}", analysis.mean_pair_cf())?;
        }
    }
    match &cli.output {
        Some(path) => {
            fs::write(path, &primary).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => out.write_all(&primary)?,
    }
    err.write_all(&secondary)?;
    Ok(())
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_FAILURE } else { 0 };
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return EXIT_FAILURE;
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: cannot start worker pool: {e}");
            return EXIT_FAILURE;
        }
    }
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(&cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_FAILURE
        }
    }
}
