/** Minimal CSV handling for the sweep output schema (no quoting, no escapes). */

export interface Table {
  columns: string[];
  rows: string[][];
}

export class UsageError extends Error {}

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new UsageError("empty CSV input");
  }
  const columns = lines[0].split(",");
  const rows = lines.slice(1).map((line) => line.split(","));
  for (const row of rows) {
    if (row.length !== columns.length) {
      throw new UsageError(
        `CSV row has ${row.length} fields, header has ${columns.length}`,
      );
    }
  }
  return { columns, rows };
}

export function columnIndex(table: Table, name: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new UsageError(
      `missing column '${name}' (have: ${table.columns.join(", ")})`,
    );
  }
  return idx;
}

/** Numeric view of one column; blank fields (flagged rows) become NaN. */
export function numericColumn(table: Table, name: string): number[] {
  const idx = columnIndex(table, name);
  return table.rows.map((row) => (row[idx] === "" ? NaN : Number(row[idx])));
}
