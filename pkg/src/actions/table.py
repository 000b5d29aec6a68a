from src.config import Settings
from src.contexts.stoppingContext import CountTable
from src.managers.stopping_manager import StoppingManager

RESULT_TYPE = CountTable


def run(settings: Settings, nmax: int) -> CountTable:
    return StoppingManager(settings).tau_table(nmax)


def to_text(result: CountTable, **_) -> str:
    cols = result.columns
    grid = [["n"] + [str(n) for n in cols], ["sigma"] + [str(result.sigma_of_n[n]) for n in cols]]
    for tau in sorted(result.rows):
        grid.append([f"tau={tau}"] + [str(result.rows[tau].get(n, "")) for n in cols])
    grid.append(["z(n)"] + [str(result.z.get(n, "")) for n in cols])
    widths = [max(len(row[i]) for row in grid) for i in range(len(grid[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) if i else cell.ljust(w) for i, (cell, w) in enumerate(zip(row, widths))).rstrip()
        for row in grid
    )


def to_rows(result: CountTable, **_):
    yield ("tau", "n", "sigma", "count")
    for tau in sorted(result.rows):
        for n, count in sorted(result.rows[tau].items()):
            yield (tau, n, result.sigma_of_n[n], count)
