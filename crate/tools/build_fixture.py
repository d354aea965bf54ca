"""Writes fixtures/eu28_2010_2016.csv (long format) from the transcription tables below.

Values are annual Eurostat figures for 2010..2016 as transcribed by hand;
see fixtures/PROVENANCE.md.
"""
import csv
import pathlib

YEARS = list(range(2010, 2017))

# ilc_li02: at-risk-of-poverty rate, 60% of median equivalised income, after social transfers, total (%)
POVERTYRATE = {
    "BE": [14.6, 15.3, 15.3, 15.1, 15.5, 14.9, 15.5],
    "BG": [20.7, 22.2, 21.2, 21.0, 21.8, 22.0, 22.9],
    "CZ": [9.0, 9.8, 9.6, 8.6, 9.7, 9.7, 9.7],
    "DK": [13.3, 12.1, 12.0, 12.3, 12.1, 12.2, 11.9],
    "DE": [15.6, 15.8, 16.1, 16.1, 16.7, 16.7, 16.5],
    "EE": [15.8, 17.5, 17.5, 18.6, 21.8, 21.6, 21.7],
    "IE": [15.2, 15.2, 15.7, 14.1, 16.3, 16.3, 16.6],
    "EL": [20.1, 21.4, 23.1, 23.1, 22.1, 21.4, 21.2],
    "ES": [20.7, 20.6, 20.8, 20.4, 22.2, 22.1, 22.3],
    "FR": [13.3, 14.0, 14.1, 13.7, 13.3, 13.6, 13.6],
    "HR": [20.6, 20.9, 20.4, 19.5, 19.4, 20.0, 19.5],
    "IT": [18.7, 19.8, 19.5, 19.3, 19.4, 19.9, 20.6],
    "CY": [15.6, 14.8, 14.7, 15.3, 14.4, 16.2, 16.1],
    "LV": [20.9, 19.0, 19.2, 19.4, 21.2, 22.5, 21.8],
    "LT": [20.5, 19.2, 18.6, 20.6, 19.1, 22.2, 21.9],
    "LU": [14.5, 13.6, 15.1, 15.9, 16.4, 15.3, 16.5],
    "HU": [12.3, 13.8, 14.0, 15.0, 15.0, 14.9, 14.5],
    "MT": [15.5, 15.6, 15.1, 15.7, 15.9, 16.3, 16.5],
    "NL": [10.3, 11.0, 10.1, 10.4, 11.6, 11.6, 12.7],
    "AT": [14.7, 14.5, 14.4, 14.4, 14.1, 13.9, 14.1],
    "PL": [17.6, 17.7, 17.1, 17.3, 17.0, 17.6, 17.3],
    "PT": [17.9, 18.0, 17.9, 18.7, 19.5, 19.5, 19.0],
    "RO": [21.6, 22.3, 22.9, 23.0, 25.4, 25.4, 25.3],
    "SI": [12.7, 13.6, 13.5, 14.5, 14.5, 14.3, 13.9],
    "SK": [12.0, 13.0, 13.2, 12.8, 12.6, 12.3, 12.7],
    "FI": [13.1, 13.7, 13.2, 11.8, 12.8, 12.4, 11.6],
    "SE": [12.9, 14.0, 14.1, 14.8, 15.1, 14.5, 16.2],
    "UK": [17.1, 16.2, 16.0, 15.9, 16.8, 16.6, 15.9],
}

# ilc_iw01: in-work at-risk-of-poverty rate, 18 years or over (%)
INWORKPOVERTYRATE = {
    "BE": [4.5, 4.2, 4.5, 4.4, 4.8, 4.5, 4.7],
    "BG": [7.7, 8.2, 7.4, 7.2, 9.3, 7.8, 11.4],
    "CZ": [3.7, 4.0, 4.5, 4.0, 3.6, 4.0, 3.8],
    "DK": [6.6, 5.7, 5.6, 5.6, 5.0, 5.3, 5.4],
    "DE": [7.2, 7.7, 7.7, 8.6, 9.9, 9.6, 9.5],
    "EE": [6.5, 8.1, 8.5, 8.8, 11.8, 10.3, 9.6],
    "IE": [5.8, 5.2, 5.5, 4.9, 5.5, 4.8, 4.8],
    "EL": [13.8, 11.9, 15.1, 13.2, 13.4, 13.4, 14.1],
    "ES": [12.7, 12.3, 12.3, 10.5, 12.6, 13.1, 13.1],
    "FR": [6.5, 7.6, 8.0, 7.8, 8.0, 7.5, 7.9],
    "HR": [6.2, 6.1, 6.2, 5.9, 5.7, 5.6, 5.6],
    "IT": [9.5, 11.1, 11.1, 11.2, 11.0, 11.6, 11.7],
    "CY": [7.3, 7.3, 8.2, 9.0, 7.8, 8.6, 9.4],
    "LV": [9.7, 9.5, 9.2, 8.6, 8.1, 9.4, 8.3],
    "LT": [12.4, 9.4, 7.7, 9.0, 8.6, 9.9, 8.5],
    "LU": [10.6, 9.9, 10.3, 11.2, 11.1, 11.6, 12.0],
    "HU": [5.3, 6.0, 5.6, 6.3, 7.1, 9.3, 9.6],
    "MT": [5.9, 6.5, 5.7, 5.7, 5.6, 5.3, 5.9],
    "NL": [5.1, 5.4, 4.6, 4.9, 5.3, 5.1, 5.6],
    "AT": [7.7, 8.1, 7.7, 7.9, 7.2, 7.8, 8.3],
    "PL": [11.5, 11.1, 10.5, 10.8, 10.7, 11.2, 10.9],
    "PT": [9.7, 10.3, 9.8, 10.5, 10.7, 10.9, 10.9],
    "RO": [17.3, 18.9, 19.1, 17.9, 19.5, 18.8, 18.6],
    "SI": [5.3, 6.0, 6.5, 7.1, 6.3, 6.4, 6.1],
    "SK": [5.7, 7.6, 6.3, 6.0, 5.9, 6.1, 6.5],
    "FI": [3.7, 3.9, 3.6, 3.7, 3.6, 2.8, 3.1],
    "SE": [6.5, 6.8, 6.6, 7.0, 7.8, 7.2, 6.9],
    "UK": [7.4, 7.8, 8.4, 8.3, 8.6, 8.3, 8.6],
}

# edat_lfse_20: young people (15-24) neither in employment nor in education and training (%)
NEETSRATE = {
    "BE": [10.9, 11.8, 12.3, 12.7, 12.0, 12.2, 9.9],
    "BG": [21.0, 21.8, 21.5, 21.6, 20.2, 19.3, 18.2],
    "CZ": [8.8, 8.3, 8.9, 9.1, 8.1, 7.5, 7.0],
    "DK": [6.0, 6.3, 6.6, 6.0, 5.8, 6.2, 5.8],
    "DE": [8.3, 7.5, 7.1, 6.3, 6.4, 6.2, 6.7],
    "EE": [14.0, 11.8, 12.2, 11.3, 11.7, 10.8, 9.1],
    "IE": [19.2, 18.8, 18.7, 16.1, 15.2, 14.3, 12.4],
    "EL": [14.8, 17.4, 20.2, 20.4, 19.1, 17.2, 15.8],
    "ES": [17.8, 18.2, 18.6, 18.6, 17.1, 15.6, 14.6],
    "FR": [12.7, 12.3, 12.5, 11.2, 11.4, 12.0, 11.9],
    "HR": [15.7, 16.2, 16.6, 19.6, 19.3, 18.1, 16.9],
    "IT": [19.0, 19.7, 21.0, 22.2, 22.1, 21.4, 19.9],
    "CY": [11.7, 14.6, 16.0, 18.7, 17.0, 15.3, 16.0],
    "LV": [17.8, 16.0, 14.9, 13.0, 12.0, 10.5, 11.2],
    "LT": [13.2, 11.8, 11.1, 11.1, 9.9, 9.2, 9.4],
    "LU": [5.1, 4.7, 5.9, 5.0, 6.3, 6.2, 5.4],
    "HU": [12.6, 13.2, 14.8, 15.5, 13.6, 11.6, 11.0],
    "MT": [9.5, 10.2, 10.6, 9.9, 10.5, 10.4, 8.6],
    "NL": [4.3, 4.3, 4.9, 5.6, 5.5, 4.7, 4.6],
    "AT": [7.4, 7.3, 6.8, 7.3, 7.7, 7.5, 7.7],
    "PL": [10.8, 11.5, 11.8, 12.2, 12.0, 11.0, 10.5],
    "PT": [11.4, 12.6, 13.9, 14.1, 12.3, 11.3, 10.6],
    "RO": [16.6, 17.5, 16.8, 17.2, 17.0, 18.1, 17.4],
    "SI": [7.1, 7.1, 9.3, 9.2, 9.4, 9.5, 8.0],
    "SK": [14.1, 13.8, 13.8, 13.7, 12.8, 13.7, 12.3],
    "FI": [9.0, 8.4, 8.6, 9.3, 10.2, 10.6, 9.9],
    "SE": [7.7, 7.5, 7.8, 7.5, 7.2, 6.7, 6.5],
    "UK": [13.6, 14.2, 13.9, 13.2, 11.9, 11.1, 10.9],
}

# gov_10a_exp, COFOG GF10 social protection, general government total expenditure (% of GDP)
SOCIALEXP = {
    "BE": [19.0, 19.3, 19.7, 20.0, 19.9, 19.6, 19.5],
    "BG": [13.3, 13.1, 13.1, 14.0, 14.5, 13.7, 13.0],
    "CZ": [13.4, 13.3, 13.5, 13.5, 13.1, 12.5, 12.3],
    "DK": [24.6, 24.3, 24.3, 24.3, 23.9, 23.6, 22.9],
    "DE": [20.5, 19.5, 19.3, 19.2, 19.1, 19.1, 19.4],
    "EE": [14.3, 12.8, 12.4, 12.1, 12.1, 12.9, 13.2],
    "IE": [17.6, 16.7, 16.2, 14.9, 13.1, 10.4, 9.9],
    "EL": [18.5, 20.3, 21.0, 20.6, 19.8, 20.1, 20.4],
    "ES": [16.9, 17.1, 17.9, 18.1, 17.9, 17.3, 16.9],
    "FR": [23.7, 23.6, 24.0, 24.3, 24.5, 24.4, 24.5],
    "HR": [15.0, 15.1, 15.1, 15.4, 15.0, 14.6, 14.3],
    "IT": [20.2, 20.1, 20.8, 21.3, 21.5, 21.4, 21.1],
    "CY": [11.8, 12.2, 12.7, 14.5, 15.7, 14.3, 13.4],
    "LV": [14.4, 12.7, 11.6, 11.7, 11.6, 11.8, 12.0],
    "LT": [14.1, 12.7, 11.9, 11.4, 11.3, 11.4, 11.2],
    "LU": [19.0, 18.3, 18.9, 18.8, 18.5, 18.0, 18.0],
    "HU": [17.1, 16.1, 15.4, 14.9, 14.4, 14.2, 14.0],
    "MT": [13.6, 13.6, 13.8, 13.6, 13.0, 12.5, 11.9],
    "NL": [16.4, 16.5, 16.9, 17.3, 16.9, 16.6, 16.3],
    "AT": [21.4, 20.8, 20.9, 21.3, 21.6, 21.4, 21.3],
    "PL": [17.5, 16.5, 16.3, 16.6, 16.3, 16.2, 16.6],
    "PT": [18.3, 18.6, 19.0, 19.8, 19.4, 18.7, 18.2],
    "RO": [13.9, 13.2, 12.6, 12.1, 11.8, 11.6, 11.6],
    "SI": [18.7, 19.1, 19.1, 19.0, 18.3, 17.8, 17.3],
    "SK": [15.8, 15.0, 15.0, 15.2, 15.3, 14.9, 15.3],
    "FI": [22.7, 22.4, 23.5, 24.4, 25.1, 25.4, 25.5],
    "SE": [20.3, 19.7, 20.3, 20.9, 20.5, 19.9, 19.8],
    "UK": [17.4, 17.1, 17.4, 16.9, 16.3, 16.2, 15.5],
}

TABLES = [
    ("povertyrate", POVERTYRATE),
    ("inworkpovertyrate", INWORKPOVERTYRATE),
    ("neetsrate", NEETSRATE),
    ("socialexp", SOCIALEXP),
]


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "eu28_2010_2016.csv"
    with out.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["geo", "time", "variable", "value"])
        for name, table in TABLES:
            assert len(table) == 28, name
            for geo in sorted(table):
                row = table[geo]
                assert len(row) == len(YEARS), (name, geo)
                for year, value in zip(YEARS, row):
                    w.writerow([geo, year, name, f"{value:.1f}"])
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
