use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use graphmml::codes::{automorphism_count_with_limit, CodesError, GeneralTree, StrictBinaryTree};
use graphmml::context::{
    chain_information, conditional_table, information_content, ContextError, ContextModel,
    MaxDegreeMap, StepRecord,
};
use graphmml::graph::{connected_components, Graph, Label};
use graphmml::smiles::{
    molecule_model, parse_setting, read_molecule, Element, Molecule, SmilesError, ValenceConfig,
};
use graphmml::Bits;
use rayon::prelude::*;

use crate::error::CliError;
use crate::files::{self, FileKind, LabelledGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeAction {
    Encode,
    Decode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeKind {
    Strict,
    General,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub depth: usize,
    pub format: Format,
    /// `Label=limit` overrides, applied after the config file.
    pub valence: Vec<String>,
    pub valence_config: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            depth: graphmml::context::DEFAULT_DEPTH,
            format: Format::Tsv,
            valence: Vec::new(),
            valence_config: None,
        }
    }
}

impl Options {
    fn bits(&self, b: Bits) -> String {
        // -log2(1) is -0.0; print it as 0.
        let b = b.0 + 0.0;
        match self.format {
            Format::Tsv => format!("{b:.6}"),
            Format::Human => format!("{b:.1}"),
        }
    }

    fn settings(&self) -> Result<Vec<String>, CliError> {
        let mut out = Vec::new();
        if let Some(path) = &self.valence_config {
            let text = read(path)?;
            out.extend(
                text.lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(String::from),
            );
        }
        out.extend(self.valence.iter().cloned());
        Ok(out)
    }

    fn valences(&self) -> Result<ValenceConfig, CliError> {
        let mut config = ValenceConfig::default();
        for setting in self.settings()? {
            config
                .apply(&setting)
                .map_err(|e| CliError::Valence(e.to_string()))?;
        }
        Ok(config)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

enum Source {
    Molecules(Vec<(String, String)>),
    Graph(String, LabelledGraph),
}

fn load_source(path: &Path) -> Result<Source, CliError> {
    let text = read(path)?;
    let origin = path.display().to_string();
    match files::detect(&text) {
        FileKind::EdgeList => {
            let g = files::parse_edge_list(&text).map_err(|e| CliError::parse(&origin, e))?;
            Ok(Source::Graph(stem(path), g))
        }
        FileKind::Molecules => {
            let records =
                files::parse_molecule_file(&text).map_err(|e| CliError::parse(&origin, e))?;
            if records.is_empty() {
                return Err(CliError::parse(origin, "no molecules in file"));
            }
            Ok(Source::Molecules(records))
        }
    }
}

/// Graphs loaded from a set of files, all of one kind.
pub enum Dataset {
    Molecules(Vec<(String, Molecule)>),
    Graphs(Vec<(String, LabelledGraph)>),
}

impl Dataset {
    pub fn len(&self) -> usize {
        match self {
            Dataset::Molecules(m) => m.len(),
            Dataset::Graphs(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn molecule_error(name: &str, err: SmilesError) -> CliError {
    match err {
        SmilesError::ValenceExceeded { .. } => CliError::Valence(format!("{name}: {err}")),
        other => CliError::parse(name, other),
    }
}

pub fn read_smiles(name: &str, smiles: &str, config: &ValenceConfig) -> Result<Molecule, CliError> {
    read_molecule(smiles, config)
        .map(|(g, _)| g)
        .map_err(|e| molecule_error(name, e))
}

/// Loads each group of files; every file across all groups must be of the
/// same kind.
pub fn load(groups: &[&[PathBuf]], opts: &Options) -> Result<Vec<Dataset>, CliError> {
    let mut sources = Vec::new();
    for group in groups {
        let mut loaded = Vec::new();
        for path in group.iter() {
            loaded.push(load_source(path)?);
        }
        sources.push(loaded);
    }
    let mut kinds = sources
        .iter()
        .flatten()
        .map(|s| matches!(s, Source::Molecules(_)));
    let molecules = match kinds.next() {
        None => true,
        Some(first) => {
            if kinds.any(|k| k != first) {
                return Err(CliError::Usage(
                    "molecule files and edge-list files cannot be mixed".to_string(),
                ));
            }
            first
        }
    };
    let config = if molecules {
        Some(opts.valences()?)
    } else {
        None
    };
    sources
        .into_iter()
        .map(|group| {
            if let Some(config) = &config {
                let mut out = Vec::new();
                for source in group {
                    if let Source::Molecules(records) = source {
                        for (name, smiles) in records {
                            let g = read_smiles(&name, &smiles, config)?;
                            out.push((name, g));
                        }
                    }
                }
                Ok(Dataset::Molecules(out))
            } else {
                Ok(Dataset::Graphs(
                    group
                        .into_iter()
                        .filter_map(|s| match s {
                            Source::Graph(name, g) => Some((name, g)),
                            Source::Molecules(_) => None,
                        })
                        .collect(),
                ))
            }
        })
        .collect()
}

/// Vertex alphabet and degree bounds observed in `graphs`, then overridden
/// by `Label=limit` settings; edge alphabet as observed.
pub fn graph_model<'a>(
    graphs: impl IntoIterator<Item = &'a LabelledGraph>,
    opts: &Options,
) -> Result<ContextModel<String, String>, CliError> {
    let mut degrees: BTreeMap<String, usize> = BTreeMap::new();
    let mut edge_labels = Vec::new();
    for g in graphs {
        for v in 0..g.vertex_count() {
            let max = degrees.entry(g.label(v).clone()).or_insert(1);
            *max = (*max).max(g.degree(v));
        }
        edge_labels.extend(g.edges().iter().map(|e| e.label.clone()));
    }
    for setting in opts.settings()? {
        let (label, max) = parse_setting(&setting).ok_or_else(|| {
            CliError::Valence(format!(
                "invalid valence setting {setting:?}; expected Label=limit with limit >= 1"
            ))
        })?;
        degrees.insert(label.to_string(), max);
    }
    let degrees: MaxDegreeMap<String> = degrees.into_iter().collect();
    Ok(ContextModel::new(degrees, edge_labels).with_depth(opts.depth))
}

pub fn molecules_model(
    opts: &Options,
) -> Result<ContextModel<Element, graphmml::smiles::Bond>, CliError> {
    Ok(molecule_model(&opts.valences()?).with_depth(opts.depth))
}

fn context_error(name: &str, err: ContextError) -> CliError {
    match err {
        ContextError::MissingDegree { .. }
        | ContextError::DegreeExceeded { .. }
        | ContextError::ZeroDegree { .. } => CliError::Valence(format!("{name}: {err}")),
        other => CliError::Model(format!("{name}: {other}")),
    }
}

struct Measured {
    name: String,
    total: Bits,
    vertices: usize,
    edges: usize,
    steps: Vec<StepRecord>,
}

/// Bits for `g`, one component at a time when it is disconnected. Step
/// element ids are then local to each component.
fn measure<V, E>(
    name: &str,
    g: &Graph<V, E>,
    given: &[Graph<V, E>],
    model: &ContextModel<V, E>,
) -> Result<Measured, CliError>
where
    V: Label + Display,
    E: Label + Display,
{
    let parts = if g.is_directed() || g.vertex_count() == 0 {
        Vec::new()
    } else {
        connected_components(g)
    };
    let (total, steps) = if parts.len() <= 1 {
        let r = information_content(g, given, model).map_err(|e| context_error(name, e))?;
        (r.total, r.steps)
    } else {
        let mut total = Bits::ZERO;
        let mut steps = Vec::new();
        for part in parts {
            let r = information_content(&part.graph, given, model)
                .map_err(|e| context_error(name, e))?;
            total += r.total;
            steps.extend(r.steps);
        }
        (total, steps)
    };
    Ok(Measured {
        name: name.to_string(),
        total,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        steps,
    })
}

fn measure_all<V, E>(
    targets: &[(String, Graph<V, E>)],
    given: &[(String, Graph<V, E>)],
    model: &ContextModel<V, E>,
) -> Result<Vec<Measured>, CliError>
where
    V: Label + Display,
    E: Label + Display,
{
    let backgrounds: Vec<Graph<V, E>> = given.iter().map(|(_, g)| g.clone()).collect();
    targets
        .par_iter()
        .map(|(name, g)| measure(name, g, &backgrounds, model))
        .collect()
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Tsv => {
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    out.push_str(&row.join("\t"));
                    out.push('\n');
                }
            }
            Format::Human => {
                let mut widths = vec![0; self.header.len()];
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> = row
                        .iter()
                        .zip(&widths)
                        .enumerate()
                        .map(|(i, (cell, &w))| {
                            if i == 0 {
                                format!("{cell:<w$}")
                            } else {
                                format!("{cell:>w$}")
                            }
                        })
                        .collect();
                    out.push_str(cells.join("  ").trim_end());
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn info_table(rows: Vec<Measured>, steps: bool, opts: &Options) -> String {
    let mut table = if steps {
        Table::new(&["name", "step", "kind", "outcome", "bits"])
    } else {
        Table::new(&["name", "bits", "vertices", "edges"])
    };
    for m in rows {
        if steps {
            for (i, s) in m.steps.iter().enumerate() {
                table.rows.push(vec![
                    m.name.clone(),
                    i.to_string(),
                    s.kind.to_string(),
                    s.outcome.clone(),
                    opts.bits(s.bits),
                ]);
            }
        } else {
            table.rows.push(vec![
                m.name,
                opts.bits(m.total),
                m.vertices.to_string(),
                m.edges.to_string(),
            ]);
        }
    }
    table.render(opts.format)
}

/// One row per target graph, conditioned on every graph in `given`.
pub fn info(
    targets: &[PathBuf],
    given: &[PathBuf],
    steps: bool,
    opts: &Options,
) -> Result<String, CliError> {
    if targets.is_empty() {
        return Err(CliError::Usage(
            "info needs at least one target file".to_string(),
        ));
    }
    let mut sets = load(&[targets, given], opts)?.into_iter();
    let (t, g) = (sets.next().unwrap(), sets.next().unwrap());
    let rows = match (t, g) {
        (Dataset::Molecules(t), Dataset::Molecules(g)) => {
            measure_all(&t, &g, &molecules_model(opts)?)?
        }
        (Dataset::Graphs(t), Dataset::Graphs(g)) => {
            let model = graph_model(t.iter().chain(&g).map(|(_, g)| g), opts)?;
            measure_all(&t, &g, &model)?
        }
        // With no given files the background set defaults to molecules.
        (Dataset::Graphs(t), Dataset::Molecules(g)) if g.is_empty() => {
            let model = graph_model(t.iter().map(|(_, g)| g), opts)?;
            measure_all(&t, &[], &model)?
        }
        _ => unreachable!("load rejects mixed kinds"),
    };
    Ok(info_table(rows, steps, opts))
}

fn require_connected<V: Label, E: Label>(graphs: &[(String, Graph<V, E>)]) -> Result<(), CliError> {
    for (name, g) in graphs {
        if g.is_directed() {
            return Err(CliError::Model(format!(
                "{name}: context model needs an undirected graph"
            )));
        }
        if connected_components(g).len() > 1 {
            return Err(CliError::Model(format!(
                "{name}: graph is not connected; use `info` to measure it component by component"
            )));
        }
    }
    Ok(())
}

fn load_one(files: &[PathBuf], what: &str, opts: &Options) -> Result<Dataset, CliError> {
    if files.is_empty() {
        return Err(CliError::Usage(format!("{what} needs at least one file")));
    }
    let data = load(&[files], opts)?.pop().unwrap();
    if data.is_empty() {
        return Err(CliError::Usage(format!("{what} needs at least one graph")));
    }
    Ok(data)
}

fn render_matrix(names: &[String], cells: &[Vec<Bits>], opts: &Options) -> String {
    let mut header = vec!["name"];
    header.extend(names.iter().map(String::as_str));
    let mut table = Table::new(&header);
    for (i, row) in cells.iter().enumerate() {
        let mut out = vec![names[i].clone()];
        for (j, &b) in row.iter().enumerate() {
            let text = opts.bits(b);
            out.push(if i == j && opts.format == Format::Human {
                format!("({text})")
            } else {
                text
            });
        }
        table.rows.push(out);
    }
    table.render(opts.format)
}

fn table_of<V, E>(
    graphs: &[(String, Graph<V, E>)],
    model: &ContextModel<V, E>,
    opts: &Options,
) -> Result<String, CliError>
where
    V: Label + Display,
    E: Label + Display,
{
    require_connected(graphs)?;
    let t = conditional_table(graphs, model).map_err(|e| context_error("table", e))?;
    Ok(render_matrix(&t.names, &t.cells, opts))
}

/// Cell (row, column) is the row graph given the column graph.
pub fn table(files: &[PathBuf], opts: &Options) -> Result<String, CliError> {
    match load_one(files, "table", opts)? {
        Dataset::Molecules(m) => table_of(&m, &molecules_model(opts)?, opts),
        Dataset::Graphs(g) => {
            let model = graph_model(g.iter().map(|(_, g)| g), opts)?;
            table_of(&g, &model, opts)
        }
    }
}

fn chain_of<V, E>(
    graphs: &[(String, Graph<V, E>)],
    model: &ContextModel<V, E>,
    opts: &Options,
) -> Result<String, CliError>
where
    V: Label + Display,
    E: Label + Display,
{
    require_connected(graphs)?;
    let report = chain_information(graphs, model).map_err(|e| context_error("chain", e))?;
    let mut table = Table::new(&["name", "given", "bits"]);
    for (i, (name, bits)) in report.items.iter().enumerate() {
        let given = if i == 0 {
            "-".to_string()
        } else {
            report.items[..i]
                .iter()
                .map(|(n, _)| n.as_str())
                .collect::<Vec<_>>()
                .join(",")
        };
        table.rows.push(vec![name.clone(), given, opts.bits(*bits)]);
    }
    table.rows.push(vec![
        "total".to_string(),
        "-".to_string(),
        opts.bits(report.total),
    ]);
    Ok(table.render(opts.format))
}

/// Each graph given all the graphs before it, in file order.
pub fn chain(files: &[PathBuf], opts: &Options) -> Result<String, CliError> {
    match load_one(files, "chain", opts)? {
        Dataset::Molecules(m) => chain_of(&m, &molecules_model(opts)?, opts),
        Dataset::Graphs(g) => {
            let model = graph_model(g.iter().map(|(_, g)| g), opts)?;
            chain_of(&g, &model, opts)
        }
    }
}

fn tree_error(err: CodesError) -> CliError {
    CliError::parse("tree", err)
}

pub fn tree(action: TreeAction, kind: TreeKind, input: &str) -> Result<String, CliError> {
    let text = match (action, kind) {
        (TreeAction::Encode, TreeKind::Strict) => input
            .parse::<StrictBinaryTree>()
            .map_err(tree_error)?
            .encode(),
        (TreeAction::Encode, TreeKind::General) => {
            input.parse::<GeneralTree>().map_err(tree_error)?.encode()
        }
        (TreeAction::Decode, TreeKind::Strict) => StrictBinaryTree::decode(input.trim())
            .map_err(tree_error)?
            .to_string(),
        (TreeAction::Decode, TreeKind::General) => GeneralTree::decode(input.trim())
            .map_err(tree_error)?
            .to_string(),
    };
    Ok(text + "\n")
}

fn ordering_rows<V: Label, E: Label>(
    graphs: &[(String, Graph<V, E>)],
    limit: usize,
    opts: &Options,
    table: &mut Table,
) -> Result<(), CliError> {
    for (name, g) in graphs {
        let count = automorphism_count_with_limit(g, limit).map_err(|e| match e {
            CodesError::TooManyVertices { .. } => CliError::SizeLimit(format!("{name}: {e}")),
            other => CliError::Model(format!("{name}: {other}")),
        })?;
        let orderings: f64 = (1..=g.vertex_count()).map(|i| i as f64).product();
        let surplus = Bits((orderings / count as f64).log2());
        let bits = match opts.format {
            Format::Tsv => format!("{:.6}", surplus.0),
            Format::Human => format!("{:.3}", surplus.0),
        };
        table.rows.push(vec![
            name.clone(),
            g.vertex_count().to_string(),
            count.to_string(),
            bits,
        ]);
    }
    Ok(())
}

/// Automorphism count and ordering surplus for each graph.
pub fn ordering(files: &[PathBuf], limit: usize, opts: &Options) -> Result<String, CliError> {
    let mut table = Table::new(&["name", "vertices", "automorphisms", "surplus_bits"]);
    match load_one(files, "ordering", opts)? {
        Dataset::Molecules(m) => ordering_rows(&m, limit, opts, &mut table)?,
        Dataset::Graphs(g) => ordering_rows(&g, limit, opts, &mut table)?,
    }
    Ok(table.render(opts.format))
}

/// Each graph as an edge list, preceded by a `# name` line.
pub fn parse(files: &[PathBuf], smiles: Option<&str>, opts: &Options) -> Result<String, CliError> {
    let mut out = String::new();
    if let Some(smiles) = smiles {
        let g = read_smiles("smiles", smiles, &opts.valences()?)?;
        out.push_str("# smiles\n");
        out.push_str(&files::write_edge_list(&g));
    }
    if files.is_empty() {
        if smiles.is_none() {
            return Err(CliError::Usage(
                "parse needs a file or --smiles".to_string(),
            ));
        }
        return Ok(out);
    }
    match load(&[files], opts)?.pop().unwrap() {
        Dataset::Molecules(m) => {
            for (name, g) in m {
                out.push_str(&format!("# {name}\n{}", files::write_edge_list(&g)));
            }
        }
        Dataset::Graphs(g) => {
            for (name, g) in g {
                out.push_str(&format!("# {name}\n{}", files::write_edge_list(&g)));
            }
        }
    }
    Ok(out)
}
