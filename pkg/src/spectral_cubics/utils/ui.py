"""Terminal UI utilities 终端 UI 工具

Functions for formatted terminal output using rich
使用 rich 进行格式化终端输出的函数
"""

from typing import Any, Iterable, Optional

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ..models.reports import (
    AnalysisReport,
    AtlasCheckReport,
    CorpusEntry,
    Gf2SuiteReport,
    SectionReport,
    SurfaceReport,
    TopologySummary,
)

# Reports go to stdout, diagnostics to stderr 报告输出到 stdout，诊断输出到 stderr
console = Console()
err_console = Console(stderr=True)

# ─── Color palette 调色板 ───
BRAND = "#D97757"
ERROR = "#D95858"
WARNING = "#D9A458"
DIM = "#6B6B6B"
TEXT = "#E6E6E6"
BORDER = "#8B7355"
ACCENT = "#E8A87C"
OK = "#81C784"

_CHECK = f"[bold {OK}]✔[/]"
_CROSS = "[bold #E57373]✖[/]"


def banner() -> None:
    """Display the title panel 显示标题面板"""
    title = Text(justify="center")
    title.append("S P E C T R A L   C U B I C S", style=f"bold {ACCENT}")
    tag = Text(justify="center")
    tag.append("«", style=f"bold {ACCENT}")
    tag.append(" cubic threefolds · spectral quintics · theta-conics ", style=f"italic {DIM}")
    tag.append("»", style=f"bold {ACCENT}")
    body = Text("\n").join([title, tag])
    console.print()
    console.print(
        Panel(
            body,
            box=box.ROUNDED,
            border_style=BORDER,
            title=f"[bold {BRAND}]  ◆  spectral-cubics  ◆  [/]",
            subtitle=f"[{DIM}]spectral-cubics -h for help[/]",
            padding=(1, 3),
            width=62,
        )
    )
    console.print()


def header(subtitle: str) -> None:
    """Display header with subtitle 显示带副标题的标题"""
    console.print()
    console.print(f"  [bold #8D6E63]{escape(subtitle)}[/]")
    console.print()


def info(message: str) -> None:
    """Display info message 显示信息消息"""
    console.print(f"[#64B5F6]•[/] {escape(message)}", style=TEXT)


def success(message: str) -> None:
    """Display success message 显示成功消息"""
    console.print(f"[bold {OK}]✔[/] [bold {OK}]{escape(message)}[/]")


def warning(message: str) -> None:
    """Display warning message 显示警告消息"""
    err_console.print(f"[bold #FFB74D]⚠[/] [bold #FFB74D]{escape(message)}[/]")


def error(message: str, err: Optional[Exception] = None) -> None:
    """Display error message 显示错误消息"""
    err_console.print(f"[bold #E57373]✖[/] [bold #E57373]{escape(message)}[/]")
    if err:
        err_console.print(f"  [dim #E57373]{escape(str(err))}[/]")


def status_done(success_status: bool, text: str = "") -> None:
    """Display status completion 显示状态完成"""
    mark = _CHECK if success_status else _CROSS
    console.print(f"{mark} [dim]{escape(text)}[/]")


def hint(text: str) -> None:
    """Display hint message 显示提示消息"""
    console.print(f"  {escape(text)}", style=DIM)


def table(rows: list[tuple[str, str]]) -> None:
    """Display a key-value table 显示键值表格"""
    console.print()
    max_label_width = max(len(label) for label, _ in rows) if rows else 0
    for label, value in rows:
        padded_label = label.ljust(max_label_width)
        console.print(f"  [dim #8D6E63]{padded_label}[/]  [bold #B39DDB]{escape(value)}[/]")
    console.print()


def _grid(*columns: str) -> Table:
    tbl = Table(show_header=True, show_edge=False, padding=(0, 2))
    for i, name in enumerate(columns):
        tbl.add_column(name, style="bold" if i == 0 else None)
    return tbl


def _mark(flag: bool) -> str:
    return _CHECK if flag else _CROSS


def _cells(values: Iterable[Any]) -> list[str]:
    return [escape("" if v is None else str(v)) for v in values]


# ─── analysis ───


def topology_block(topo: TopologySummary) -> None:
    """Class code, ovals and sweep statistics 类代码、卵形线与扫描统计"""
    chart = ", ".join(f"{k}={v}" for k, v in topo.chart.items())
    table(
        [
            ("Class", topo.class_code),
            ("Degree", str(topo.degree)),
            ("Chart", chart or "-"),
            ("Critical values", str(topo.critical_count)),
            ("Slabs", str(topo.slab_count)),
            ("J witness", ", ".join(topo.j_witness) if topo.j_witness else "-"),
        ]
    )
    if topo.ovals:
        tbl = _grid("Oval", "Parent", "Witness")
        for oval in topo.ovals:
            tbl.add_row(*_cells([oval.index, oval.parent, ", ".join(oval.witness)]))
        console.print(tbl)
        console.print()


def analysis_report(report: AnalysisReport) -> None:
    """Human-readable AnalysisReport 可读的分析报告"""
    header(f"Analysis {report.run_id}")
    if report.source:
        hint(report.source)
    if report.spectral is not None:
        table([("Quintic", report.spectral.quintic), ("Theta", report.spectral.theta)])
    if report.line is not None:
        table(
            [
                ("Line", report.line.smoothness),
                ("Line type", report.line.line_type),
                ("Theta rank", str(report.line.theta_rank)),
            ]
        )
    if report.degenerate and report.spectral is not None:
        warning("Marked line is singular on X: spectral data is degenerate")
        if report.spectral.theta_is_square:
            hint("theta is a constant times a square")
        if report.spectral.quintic_factors:
            tbl = _grid("Factor", "Degree", "Multiplicity")
            for f in report.spectral.quintic_factors:
                tbl.add_row(*_cells([f.factor, f.degree, f.multiplicity]))
            console.print(tbl)
            console.print()
        return
    if report.topology is not None:
        topology_block(report.topology)
    if report.contact is not None:
        c = report.contact
        table(
            [
                ("Contact", "yes" if c.is_contact else "no"),
                ("Multiplicities", ", ".join(str(m) for m in c.multiplicities) or "-"),
                ("Field", c.field),
                ("Real tangencies", str(len(c.real_tangencies))),
            ]
        )
    if report.region is not None:
        r = report.region
        tbl = _grid("Oval", "Visible")
        for index, visible in r.visible.items():
            tbl.add_row(str(index), _mark(visible))
        table(
            [
                ("Theta real part", r.theta_real_type),
                ("Theta inside oval", "-" if r.theta_inside is None else str(r.theta_inside)),
            ]
        )
        if r.visible:
            console.print(tbl)
            console.print()
    if report.verdict is not None:
        table([("Verdict", report.verdict)])
    if report.atlas is not None:
        atlas_summary_block(report)


def atlas_summary_block(report: AnalysisReport) -> None:
    """Atlas status with its citations 图集状态及引用"""
    assert report.atlas is not None
    a = report.atlas
    status_done(a.passed, f"atlas {a.status}: {a.quintic} / {a.verdict}")
    table([("Cubic classes", ", ".join(a.cubic_candidates) or "-")])
    for citation in a.citations:
        hint(f"· {citation}")
    console.print()


# ─── section and surface ───


def section_report(report: SectionReport) -> None:
    """Predicted against counted real lines 预测与实际实直线数"""
    header("Hyperplane section")
    table(
        [
            ("Plane line", ", ".join(report.plane_line)),
            ("Outside / inside theta", f"{report.outside} / {report.inside}"),
            ("Predicted", str(report.predicted)),
            ("Counted", str(report.counted)),
            ("Spectrum", ", ".join(f"{k}={v}" for k, v in report.spectrum.items())),
        ]
    )
    status_done(report.agrees, "sheet formula matches the section")


def surface_report(report: SurfaceReport) -> None:
    """Spectrum and line codes 谱与直线码"""
    header("Marked cubic surface")
    table(
        [
            ("Spectrum form", report.spectral_form),
            ("Counts", ", ".join(f"{k}={v}" for k, v in report.counts.items())),
            ("Line type", report.line_type or "-"),
            ("Real lines", "-" if report.real_lines is None else str(report.real_lines)),
            ("Expected", str(report.expected_real_lines)),
            ("Precision", "exact" if report.digits is None else f"{report.digits} digits"),
        ]
    )
    tbl = _grid("#", "Tag", "Point")
    for row in report.spectrum:
        tbl.add_row(*_cells([row["index"], row["tag"], row["point"]]))
    console.print(tbl)
    console.print()
    if report.codes:
        codes = _grid("Code", "Field", "Real")
        for row in report.codes:
            codes.add_row(escape(row["code"]), escape(row["field"]), _mark(row["real"]))
        console.print(codes)
        console.print()
    for note in report.notes:
        hint(note)


# ─── gf2 and atlas ───


def gf2_matrix(report: Gf2SuiteReport) -> None:
    """Pass matrix of the GF(2) suite GF(2) 套件通过矩阵"""
    header(f"GF(2) suite (fuzz {report.fuzz_cases}, seed {report.seed})")
    tbl = _grid("Model", *report.properties)
    for model, row in report.matrix.items():
        tbl.add_row(escape(model), *[_mark(row.get(p, False)) for p in report.properties])
    console.print(tbl)
    console.print()
    for line in report.failures:
        error(line)
    status_done(report.passed, "all properties hold" if report.passed else "suite failed")


def atlas_check(report: AtlasCheckReport) -> None:
    """Structural checks of the atlas 图集结构检查"""
    header("Atlas checks")
    tbl = _grid("Check", "Result")
    for name, passed in report.checks.items():
        tbl.add_row(escape(name), _mark(passed))
    console.print(tbl)
    console.print()
    if report.counts:
        table([(k, str(v)) for k, v in sorted(report.counts.items())])
    for line in report.failures:
        error(line)


def atlas_tables(doc: dict[str, Any]) -> None:
    """Plain-text rendering of the atlas dump, citations included 图集的文本形式（含引用）"""
    header("Cubic classes")
    tbl = _grid("Class", "d", "Klein", "Real locus")
    for c in doc["cubic_classes"]:
        tbl.add_row(*_cells([c["code"], c["d"], c["klein"], c["real_locus"]]))
    console.print(tbl)

    header("Quintic classes")
    tbl = _grid("Class", "d", "Klein", "Ovals", "Real locus")
    for q in doc["quintic_classes"]:
        tbl.add_row(*_cells([q["code"], q["d"], q["klein"], q["ovals"], q["real_locus"]]))
    console.print(tbl)

    for key in ("cubic_graph", "quintic_graph"):
        graph = doc[key]
        header(f"Adjacency graph {graph['name']}")
        tbl = _grid("From", "To", "Label")
        for edge in graph["edges"]:
            tbl.add_row(*_cells([edge["u"], edge["v"], edge.get("label")]))
        console.print(tbl)

    header("Matchings")
    tbl = _grid("Cubic", "Quintic", "Category", "Component", "Citation")
    for m in doc["matchings"]:
        tbl.add_row(
            *_cells([m["cubic"], m["quintic"], m["category"], m["component"], m["citation"]])
        )
    console.print(tbl)

    header("Fano components")
    tbl = _grid("Cubic", "Odd", "Others", "Tori", "Citation")
    for row in doc["fano"]:
        tbl.add_row(
            *_cells(
                [
                    row["cubic"],
                    row["odd_component"],
                    ", ".join(row["other_components"]),
                    row["tori"],
                    row["citation"],
                ]
            )
        )
    console.print(tbl)

    header("Monodromy")
    tbl = _grid("Cubic", "Group", "Order", "Torus orbits", "Citation")
    for row in doc["monodromy"]:
        orbits = ", ".join(str(o) for o in row["torus_orbits"])
        tbl.add_row(*_cells([row["cubic"], row["group"], row["order"], orbits, row["citation"]]))
    console.print(tbl)
    console.print()


# ─── corpus ───


def corpus_table(entries: list[CorpusEntry]) -> None:
    """One row per corpus document 每个语料文档一行"""
    header(f"Corpus ({len(entries)} documents)")
    tbl = _grid("Document", "Status", "Class", "Verdict", "Exit")
    for entry in entries:
        r = entry.report
        code = r.topology.class_code if r is not None and r.topology is not None else None
        verdict = r.verdict if r is not None else None
        tbl.add_row(*_cells([entry.source, entry.status, code, verdict, entry.exit_code]))
    console.print(tbl)
    console.print()
