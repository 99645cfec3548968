"""Regenerates the synthetic Rome-2016-style election fixture.

The text is random Italian-like news prose; candidate mention rates drift
week by week so the series has some shape. Output is deterministic.
"""
import datetime as dt
import json
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent
rng = random.Random(2016)

CANDIDATES = {
    "raggi": ["Virginia Raggi", "Raggi", "la Raggi"],
    "giachetti": ["Roberto Giachetti", "Giachetti"],
    "meloni": ["Giorgia Meloni", "Meloni"],
    "marchini": ["Alfio Marchini", "Marchini"],
}
WEIGHT = {"raggi": 0.36, "giachetti": 0.28, "meloni": 0.22, "marchini": 0.14}
TOPICS = ("trasporti metro autobus periferie rifiuti bilancio debito olimpiadi stadio sicurezza "
          "degrado buche traffico lavoro giovani turismo cultura scuole asili casa affitti "
          "ambiente verde parchi tasse tributi comune consiglio assessori programma promesse").split()
VERBS = ("presenta annuncia promette critica attacca difende propone incontra visita rilancia "
         "contesta sostiene replica smentisce chiede").split()
PLACES = ("Ostia Tiburtino Garbatella Prati Trastevere Testaccio Centocelle Pigneto Eur "
          "Campidoglio Monteverde Torpignattara").split()
FILLER = ("il la le i gli un una di del della dei delle a al alla con per su nel nella che e "
          "non più anche come dopo oggi ieri ancora mentre sempre").split()
POLLSTERS = ["ixe", "emg", "piepoli", "tecne"]


def pick_candidate(week_index):
    drift = {"raggi": 0.01 * week_index, "giachetti": 0.005 * week_index,
             "meloni": -0.004 * week_index, "marchini": -0.006 * week_index}
    names = list(WEIGHT)
    weights = [max(0.02, WEIGHT[n] + drift[n]) for n in names]
    return rng.choices(names, weights)[0]


def sentence(week_index):
    c = pick_candidate(week_index)
    words = [rng.choice(CANDIDATES[c]), rng.choice(VERBS)]
    for _ in range(rng.randint(4, 9)):
        r = rng.random()
        if r < 0.45:
            words.append(rng.choice(TOPICS))
        elif r < 0.85:
            words.append(rng.choice(FILLER))
        elif r < 0.93:
            words.append(rng.choice(PLACES))
        else:
            words.append(rng.choice(CANDIDATES[pick_candidate(week_index)]))
    return " ".join(words) + rng.choice([".", ",", ";", "!"])


def main():
    voting = dt.date(2016, 6, 5)
    start = dt.date(2016, 4, 4)
    end = dt.date(2016, 6, 4)
    articles = []
    n = 0
    day = start
    while day <= end + dt.timedelta(days=1):  # the voting day is included on purpose
        week_index = (day - start).days // 7
        for _ in range(rng.randint(2, 5)):
            n += 1
            title = sentence(week_index).rstrip(".,;!")
            body = " ".join(sentence(week_index) for _ in range(rng.randint(6, 12)))
            art = {"id": f"rm{n:05d}", "published": day.isoformat(), "title": title, "body": body}
            if rng.random() < 0.5:
                art["source"] = rng.choice(["repubblica.it", "corriere.it", "ilmessaggero.it", "ansa.it"])
                art["language"] = "it"
            articles.append(art)
        day += dt.timedelta(days=1)
    with open(HERE / "articles.jsonl", "w", encoding="utf-8") as f:
        for a in articles:
            f.write(json.dumps(a, ensure_ascii=False, separators=(",", ":")) + "\n")

    with open(HERE / "polls.csv", "w", encoding="utf-8") as f:
        f.write("date,option,share\n")
        day = start
        while day <= dt.date(2016, 5, 20):
            base = {"raggi": 0.30, "giachetti": 0.23, "meloni": 0.21, "marchini": 0.13, "fassina": 0.05}
            for option, share in base.items():
                f.write(f"{day.isoformat()},{option},{share + rng.uniform(-0.02, 0.02):.4f}\n")
            day += dt.timedelta(days=rng.choice([3, 4, 5]))
    print(f"{len(articles)} articles")


if __name__ == "__main__":
    main()
