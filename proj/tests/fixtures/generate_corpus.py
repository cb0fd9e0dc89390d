#!/usr/bin/env python3
# Copyright 2026 The Lakecat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the bundled fixture corpus.

Seven small synthetic sources shaped like common public health datasets:
an 11-table county indicator set, a directory of chest radiographs, four
single-table CSVs and one JSON export of ICU admissions. Output is
deterministic for a given seed; corpus.json records what each source should
profile to.

    python3 tests/fixtures/generate_corpus.py [--out tests/fixtures/corpus]
"""

import argparse
import csv
import io
import json
import random
from pathlib import Path

from PIL import Image, ImageDraw, ImageFilter

STATES = [("01", "Alabama", "AL"), ("06", "California", "CA"), ("13", "Georgia", "GA"),
          ("36", "New York", "NY"), ("48", "Texas", "TX")]
COUNTIES = ["Autauga", "Baldwin", "Barbour", "Alameda", "Butte", "Fresno", "Appling", "Bibb",
            "Cobb", "Albany", "Bronx", "Kings", "Anderson", "Bexar", "Travis", "Dallas",
            "Harris", "Tarrant", "Marin", "Kern", "Clarke", "Erie", "Monroe", "Orange",
            "Queens", "Collin", "Denton", "Hidalgo", "Madison", "Mobile"]

KEYS = ["State_FIPS_Code", "County_FIPS_Code", "CHSI_County_Name", "CHSI_State_Name",
        "CHSI_State_Abbr", "Strata_ID_Number"]

CHSI_TABLES = {
    "DATAELEMENTDESCRIPTION": None,
    "DEFINEDDATAVALUE": None,
    "DEMOGRAPHICS": ["Population_Size", "Population_Density", "Poverty", "Age_19_Under",
                     "Age_65_84", "White", "Black", "Hispanic"],
    "HEALTHYPEOPLE2010": ["Brst_Cancer", "Col_Cancer", "Lung_Cancer", "Stroke", "Suicide"],
    "LEADINGCAUSESOFDEATH": ["A_Wh_Cancer", "A_Bl_Cancer", "A_Ot_Cancer", "A_Hi_Cancer",
                             "B_Wh_Injury", "C_Wh_HeartDis"],
    "MEASURESOFBIRTHANDDEATH": ["LBW", "VLBW", "Premature", "Infant_Mortality",
                                "Brst_Cancer", "Col_Cancer", "Lung_Cancer"],
    "PREVENTIVESERVICESUSE": ["FluB_Rpt", "Pap_Smear", "Mammogram", "Proctoscopy"],
    "RELATIVEHEALTHIMPORTANCE": ["Lung_Cancer_Ind", "Col_Cancer_Ind", "Brst_Cancer_Ind"],
    "RISKFACTORSANDACCESSTOCARE": ["No_Exercise", "Few_Fruit_Veg", "Obesity",
                                   "High_Blood_Pres", "Smoker", "Diabetes", "Uninsured"],
    "SUMMARYMEASURESOFHEALTH": ["ALE", "All_Death", "Health_Status", "Unhealthy_Days"],
    "VUNERABLEPOPSANDENVHEALTH": ["No_HS_Diploma", "Unemployed", "Sev_Work_Disabled",
                                  "Major_Depression", "Recent_Drug_Use"],
}

ROWS_CHSI = 30


def write_csv(path, header, rows, delimiter=","):
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    path.write_text(buf.getvalue(), encoding="utf-8")
    return len(header)


def fmt(x, digits=2):
    return f"{x:.{digits}f}"


def chsi(out, rng):
    d = out / "chsi_cancer"
    d.mkdir(parents=True, exist_ok=True)
    counties = []
    for i in range(ROWS_CHSI):
        st = STATES[i % len(STATES)]
        counties.append((st[0], f"{(i * 7 + 1) % 200:03d}", COUNTIES[i], st[1], st[2], str(1 + i % 88)))
    tables, columns = [], 0
    for name, measures in CHSI_TABLES.items():
        fname = f"{name}.csv"
        if name == "DATAELEMENTDESCRIPTION":
            header = ["PAGE_NAME", "COLUMN_NAME", "DESCRIPTION", "DATA_TYPE"]
            rows = []
            for t, ms in CHSI_TABLES.items():
                for m in ms or []:
                    rows.append([t.title(), m, f"{m.replace('_', ' ').lower()} indicator", "float"])
        elif name == "DEFINEDDATAVALUE":
            header = ["DATA_VALUE", "DESCRIPTION"]
            rows = [["-1111", "no report"], ["-2222", "nodata"], ["-9999", "suppressed"]]
        else:
            header = KEYS + measures
            rows = []
            for c in counties:
                vals = []
                for m in measures:
                    v = rng.uniform(1, 400)
                    roll = rng.random()
                    if roll < 0.05:
                        vals.append("-1111")
                    elif roll < 0.09:
                        vals.append("NA")
                    else:
                        vals.append(fmt(v))
                rows.append(list(c) + vals)
        columns += write_csv(d / fname, header, rows)
        tables.append({"file": fname, "entity": name})
    (d / "manifest.json").write_text(json.dumps({"tables": tables}, indent=2) + "\n")
    return {"entities": len(tables), "columns": columns}


def xray(out, rng):
    d = out / "chest_xray"
    d.mkdir(parents=True, exist_ok=True)
    for i in range(8):
        img = Image.new("L", (64, 64), color=0)
        draw = ImageDraw.Draw(img)
        for y in range(64):
            draw.line([(0, y), (63, y)], fill=int(40 + 120 * y / 63))
        draw.ellipse([10, 12, 30, 52], fill=180 + rng.randint(0, 40))
        draw.ellipse([34, 12, 54, 52], fill=180 + rng.randint(0, 40))
        if i % 2:
            draw.ellipse([16 + rng.randint(0, 8), 24, 26 + rng.randint(0, 8), 34], fill=240)
        img = img.filter(ImageFilter.GaussianBlur(1.2))
        label = "PNEUMONIA" if i % 2 else "NORMAL"
        img.save(d / f"{label}_{i:03d}.jpeg", format="JPEG", quality=85)
    return {"entities": 0, "columns": 0}


def vaccinations(out, rng):
    header = ["country", "iso_code", "date", "total_vaccinations", "people_vaccinated",
              "people_fully_vaccinated", "daily_vaccinations_raw", "daily_vaccinations",
              "total_vaccinations_per_hundred", "people_vaccinated_per_hundred",
              "people_fully_vaccinated_per_hundred", "daily_vaccinations_per_million",
              "vaccines", "source_name", "source_website"]
    countries = [("Albania", "ALB"), ("Côte d'Ivoire", "CIV"), ("Denmark", "DNK"),
                 ("Japan", "JPN"), ("Peru", "PER")]
    vaccines = ["Pfizer/BioNTech", "Moderna, Pfizer/BioNTech", "Oxford/AstraZeneca, Sinovac",
                "Sputnik V"]
    rows = []
    for ci, (c, iso) in enumerate(countries):
        total = rng.randint(1000, 5000)
        for day in range(8):
            total += rng.randint(200, 2000)
            people = int(total * 0.7)
            full = "" if day < 3 else str(int(total * 0.25))
            raw = "" if day == 0 else str(rng.randint(200, 2000))
            rows.append([c, iso, f"2021-01-{10 + day:02d}", str(total), str(people), full, raw,
                         str(rng.randint(300, 1500)), fmt(total / 1e5, 2), fmt(people / 1e5, 2),
                         "" if not full else fmt(int(full) / 1e5, 2), str(rng.randint(50, 900)),
                         vaccines[ci % len(vaccines)], "Ministry of Health",
                         f"https://health.example/{iso.lower()}"])
    return {"entities": 1, "columns": write_csv(out / "country_vaccinations.csv", header, rows)}


def breast(out, rng):
    feats = ["radius", "texture", "perimeter", "area", "smoothness", "compactness", "concavity",
             "concave points", "symmetry", "fractal_dimension"]
    header = ["id", "diagnosis"] + [f"{f}_{s}" for s in ("mean", "se", "worst") for f in feats]
    rows = []
    for i in range(60):
        malignant = rng.random() < 0.4
        base = rng.uniform(10, 14) + (5 if malignant else 0)
        vals = []
        for s, scale in (("mean", 1.0), ("se", 0.08), ("worst", 1.3)):
            for j, _ in enumerate(feats):
                vals.append(fmt(base * scale * (1 + 0.1 * j) * rng.uniform(0.9, 1.1), 5))
        rows.append([str(842302 + i * 17), "M" if malignant else "B"] + vals)
    return {"entities": 1, "columns": write_csv(out / "breast_cancer_wisconsin.csv", header, rows)}


def fetal(out, rng):
    header = ["baseline value", "accelerations", "fetal_movement", "uterine_contractions",
              "light_decelerations", "severe_decelerations", "prolongued_decelerations",
              "abnormal_short_term_variability", "mean_value_of_short_term_variability",
              "percentage_of_time_with_abnormal_long_term_variability",
              "mean_value_of_long_term_variability", "histogram_width", "histogram_min",
              "histogram_max", "histogram_number_of_peaks", "histogram_number_of_zeroes",
              "histogram_mode", "histogram_mean", "histogram_median", "histogram_variance",
              "histogram_tendency", "fetal_health"]
    rows = []
    for _ in range(50):
        row = [str(rng.randint(106, 160)), fmt(rng.uniform(0, 0.02), 3), fmt(rng.uniform(0, 0.5), 3),
               fmt(rng.uniform(0, 0.015), 3), fmt(rng.uniform(0, 0.01), 3), "0.0",
               fmt(rng.choice([0, 0, 0, 0.001]), 3), str(rng.randint(12, 87)),
               fmt(rng.uniform(0.2, 7), 1), str(rng.randint(0, 91)), fmt(rng.uniform(0, 50), 1)]
        hmin = rng.randint(50, 159)
        hmax = hmin + rng.randint(3, 120)
        row += [str(hmax - hmin), str(hmin), str(hmax), str(rng.randint(0, 18)),
                str(rng.randint(0, 10)), str(rng.randint(60, 187)), str(rng.randint(73, 182)),
                str(rng.randint(77, 186)), str(rng.randint(0, 269)), str(rng.choice([-1, 0, 1])),
                fmt(rng.choice([1.0, 1.0, 1.0, 2.0, 3.0]), 1)]
        rows.append(row)
    return {"entities": 1, "columns": write_csv(out / "fetal_health.csv", header, rows)}


def lung(out, rng):
    header = ["Name", "Surname", "Age", "Smokes", "AreaQ", "Alkhol", "Result"]
    first = ["John", "Ernest", "Cierra", "Alden", "Tim", "Marie", "Élodie", "Kenji"]
    last = ["Wick", "Hemingway", "Vega", "Cantrell", "Lopez", "Curie", "Dubois", "Sato"]
    rows = []
    for i in range(40):
        smokes = rng.randint(0, 34)
        rows.append([first[i % len(first)], last[(i * 3) % len(last)], str(rng.randint(18, 77)),
                     str(smokes), str(rng.randint(1, 10)), str(rng.randint(0, 8)),
                     "1" if smokes > 15 else "0"])
    return {"entities": 1, "columns": write_csv(out / "lung_cancer.csv", header, rows)}


def icu(out, rng):
    types = ["EMERGENCY", "ELECTIVE", "URGENT"]
    diagnoses = ["SEPSIS", "PNEUMONIA", "CHEST PAIN", "GI BLEED", "CONGESTIVE HEART FAILURE"]
    records = []
    for i in range(25):
        admit = f"2130-0{1 + i % 9}-{10 + i % 18:02d}T{8 + i % 12:02d}:15:00"
        rec = {
            "subject_id": 10006 + i * 3,
            "hadm_id": 142345 + i * 11,
            "admittime": admit,
            "dischtime": admit[:11] + "18:40:00",
            "admission_type": types[i % len(types)],
            "patient": {"gender": "F" if i % 2 else "M", "anchor_age": rng.randint(21, 91),
                        "insurance": rng.choice(["Medicare", "Medicaid", "Other"])},
        }
        if i % 6:
            rec["diagnosis"] = diagnoses[i % len(diagnoses)]
        records.append(rec)
    doc = {"export": "synthetic critical care extract", "admissions": records}
    (out / "icu_admissions.json").write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n")
    return {"entities": 1, "columns": 9}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).parent / "corpus"))
    ap.add_argument("--seed", type=int, default=20260101)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)

    sources = [
        ("CHSI cancer", "chsi_cancer", "csv file", "health indicators for the US counties",
         ["health", "county", "cancer"], 0.8, "structured", chsi),
        ("Chest X-Ray Images", "chest_xray", "images", "Chest X-ray images (anterior-posterior)",
         ["x-ray", "lung", "cancer", "images"], 0.7, "unstructured", xray),
        ("Country Vaccinations", "country_vaccinations.csv", "csv file",
         "COVID-19 World Vaccination Progress", ["covid", "vaccination", "health"], 0.6,
         "structured", vaccinations),
        ("Breast Cancer Wisconsin", "breast_cancer_wisconsin.csv", "csv file",
         "diagnostic of breast tumours from digitized images of fine needle aspirates",
         ["oncology", "diagnosis"], 0.9, "structured", breast),
        ("Fetal health classification", "fetal_health.csv", "csv file",
         "classification of the health of a fetus", ["maternity", "health"], 0.75,
         "structured", fetal),
        ("Lung Cancer", "lung_cancer.csv", "csv file", "lung disease dataset with four indicators",
         ["lung", "oncology"], 0.5, "structured", lung),
        ("ICU Admissions", "icu_admissions.json", "database",
         "a freely accessible critical care extract", ["critical care", "hospital"], 0.85,
         "semi-structured", icu),
    ]
    corpus = []
    for name, loc, stype, desc, tags, cred, dtype, fn in sources:
        shape = fn(out, rng)
        corpus.append({"name": name, "location": loc, "type": stype, "owner": "open data portal",
                       "description": desc, "tags": tags, "credibility": cred,
                       "expected": {"datasetType": dtype, **shape}})
    (out / "corpus.json").write_text(json.dumps({"sources": corpus}, indent=2, ensure_ascii=False) + "\n")

    # Base table for the derived-dataset experiment: unique rows, numeric and
    # nominal columns, two near-identical column names.
    header = ["County_Name", "State_Name", "Population_Size", "Poverty", "Min_Lung_Cancer",
              "Max_Lung_Cancer", "Obesity", "Smoker"]
    rows, seen = [], set()
    i = 0
    while len(rows) < 120:
        st = STATES[i % len(STATES)]
        county = f"{COUNTIES[i % len(COUNTIES)]} {i // len(COUNTIES) + 1}"
        lo = rng.uniform(20, 60)
        row = [county, st[1], str(rng.randint(2000, 900000)), fmt(rng.uniform(5, 30), 1),
               fmt(lo, 1), fmt(lo + rng.uniform(5, 40), 1), fmt(rng.uniform(15, 40), 1),
               fmt(rng.uniform(8, 35), 1)]
        if tuple(row) not in seen:
            seen.add(tuple(row))
            rows.append(row)
        i += 1
    derived = Path(__file__).parent / "derived"
    derived.mkdir(parents=True, exist_ok=True)
    write_csv(derived / "chsi_base.csv", header, rows)


if __name__ == "__main__":
    main()
