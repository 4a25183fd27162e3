// Copyright 2026 The numctx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generates the bundled synthetic corpus: Malay news-style sentences built
// from per-format number patterns, the keyword lexicon's context words, and
// distractor clauses. Every number in a generated sentence becomes its own
// labeled row.
//
//   gen_corpus [--seed N] [--per-class N] > data/corpus.csv

#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "numctx/corpus.h"
#include "numctx/errors.h"
#include "numctx/label.h"
#include "numctx/locator.h"
#include "numctx/utf8.h"

namespace {

using namespace numctx;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int Int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool Chance(double p) { return static_cast<double>(engine_() % 1'000'000) < p * 1e6; }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(Int(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

std::string Pad2(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

const std::vector<std::string> kMonths = {
    "Januari", "Februari", "Mac",       "April",   "Mei",      "Jun",
    "Julai",   "Ogos",     "September", "Oktober", "November", "Disember",
};

const std::map<std::string, std::vector<std::string>> kFillers = {
    {"subj",
     {"Kerajaan", "Syarikat itu", "Polis", "Menteri Kewangan", "Pihak berkuasa tempatan",
      "Penduduk kampung", "Jabatan Perangkaan", "Majlis Perbandaran", "Kementerian Kesihatan",
      "Pengerusi persatuan", "Bank Negara", "Pasukan bola sepak negeri", "Universiti itu",
      "Pihak hospital", "Sekolah tersebut", "Pemandu lori", "Pengurus besar syarikat"}},
    {"tail",
     {"menurut laporan akhbar", "kata beliau", "semalam", "dalam satu kenyataan",
      "menurut sumber", "seperti yang dilaporkan", "di ibu negara", "ketika ditemui pemberita",
      "bagi tujuan tersebut", "minggu lalu", "tahun ini", "di Kuala Lumpur"}},
    {"place",
     {"Kuala Lumpur", "Johor Bahru", "Pulau Pinang", "Kota Bharu", "Ipoh", "Melaka",
      "Kuching", "Kota Kinabalu", "Seremban", "Shah Alam"}},
    {"event",
     {"mesyuarat agung", "majlis perasmian", "pameran buku", "perlawanan akhir",
      "kempen derma darah", "sesi temu duga", "program gotong-royong", "seminar keusahawanan"}},
    {"item",
     {"beras", "gula", "minyak masak", "tepung", "telur", "sayur-sayuran", "ikan", "ayam"}},
    {"collective",
     {"orang", "buah", "biji", "ekor", "botol", "buku", "batang", "helai", "kumpulan",
      "tingkat", "bungkus", "naskhah", "kuntum", "gelas", "keping"}},
    {"unit", {"meter", "kilometer", "gram", "kilogram", "kelvin", "ampere"}},
    {"odd_unit", {"darjah Celsius", "cm", "km", "liter", "hektar", "tan metrik", "kaki persegi"}},
    {"period", {"pagi", "petang", "malam"}},
    {"currency", {"ringgit", "dolar", "euro", "baht", "dinar"}},
    {"phone_word", {"telefon", "talian", "tel", "menghubungi"}},
    {"value_word", {"bernilai", "berharga", "berjumlah", "harga", "nilai", "jumlah"}},
};

// Number slot -> (label, value generator).
std::pair<FormatLabel, std::string> Number(const std::string& kind, Rng& rng) {
  using L = FormatLabel;
  if (kind == "day") return {L::kDate, std::to_string(rng.Int(1, 31))};
  if (kind == "year") return {L::kDate, std::to_string(rng.Int(1957, 2025))};
  if (kind == "sdate") {
    return {L::kDate, Pad2(rng.Int(1, 28)) + "/" + Pad2(rng.Int(1, 12)) + "/" +
                          std::to_string(rng.Int(1990, 2025))};
  }
  if (kind == "idate") {
    return {L::kDate, std::to_string(rng.Int(1990, 2025)) + "-" + Pad2(rng.Int(1, 12)) + "-" +
                          Pad2(rng.Int(1, 28))};
  }
  if (kind == "ym") return {L::kDate, std::to_string(rng.Int(1990, 2025)) + "-" + Pad2(rng.Int(1, 12))};
  if (kind == "hour") return {L::kTime, std::to_string(rng.Int(1, 12))};
  if (kind == "hdot") {
    return {L::kTime, std::to_string(rng.Int(1, 12)) + "." + Pad2(rng.Int(0, 11) * 5)};
  }
  if (kind == "hcolon") return {L::kTime, Pad2(rng.Int(0, 23)) + ":" + Pad2(rng.Int(0, 59))};
  if (kind == "phone") {
    std::string area = rng.Chance(0.5) ? "0" + std::to_string(rng.Int(3, 9))
                                       : "01" + std::to_string(rng.Int(0, 9));
    return {L::kPhone, area + "-" + std::to_string(rng.Int(2000000, 9999999))};
  }
  if (kind == "phonei") {
    return {L::kPhone, "+60-" + std::to_string(rng.Int(3, 9)) + "-" +
                           std::to_string(rng.Int(20000000, 99999999))};
  }
  if (kind == "phonep") return {L::kPhone, "01" + std::to_string(rng.Int(100000000, 999999999))};
  if (kind == "rm" || kind == "rmg") {
    std::string amount = rng.Chance(0.4)
                             ? std::to_string(rng.Int(1, 99)) + "." + Pad2(rng.Int(1, 19) * 5)
                             : std::to_string(rng.Int(1, 900) * (rng.Chance(0.5) ? 1 : 10));
    return {L::kCurrency, (kind == "rm" ? "RM " : "RM") + amount};
  }
  if (kind == "amt") {
    return {L::kCurrency, rng.Chance(0.25) ? std::to_string(rng.Int(1, 99)) + "." + Pad2(rng.Int(0, 99))
                                           : std::to_string(rng.Int(1, 500))};
  }
  if (kind == "cnt") return {L::kMeasurement, std::to_string(rng.Int(1, rng.Chance(0.7) ? 60 : 500))};
  if (kind == "mdec") {
    return {L::kMeasurement, std::to_string(rng.Int(1, 99)) + "." + std::to_string(rng.Int(1, 9))};
  }
  if (kind == "pct") return {L::kPercentage, std::to_string(rng.Int(1, 100))};
  if (kind == "pcts") return {L::kPercentage, std::to_string(rng.Int(1, 100)) + "%"};
  if (kind == "pctd") {
    return {L::kPercentage, std::to_string(rng.Int(1, 60)) + "." + std::to_string(rng.Int(1, 9))};
  }
  throw ContractError("unknown slot kind " + kind);
}

// {#kind} is a labeled number slot; {name} draws from kFillers; {Month} a
// month name.
const std::map<FormatLabel, std::vector<std::string>> kTemplates = {
    {FormatLabel::kDate,
     {
         "Mahkamah menetapkan {#day} {Month} ini untuk sebutan semula kes",
         "{subj} akan mengadakan {event} pada {#day} {Month} ini",
         "Tarikh tutup peraduan masih kekal pada {#day} {Month}",
         "Keputusan peperiksaan akan diumumkan pada {#day} {Month} {#year}",
         "{subj} ditubuhkan pada {#day} {Month} {#year} {tail}",
         "Sejak tahun {#year}, {subj} telah berkembang pesat",
         "{subj} mula beroperasi pada tahun {#year}",
         "Permohonan mesti dihantar sebelum {#sdate} {tail}",
         "Notis bertarikh {#sdate} itu telah diedarkan kepada semua penduduk",
         "Laporan bertarikh {#idate} menunjukkan peningkatan kes",
         "Data bagi tempoh {#ym} telah dikemas kini oleh {subj}",
         "Pada {#day} {Month} lalu, seramai {#cnt} {collective} hadir ke {event}",
         "Mesyuarat ditangguhkan ke {#day} {Month} {tail}",
         "Bermula {#day} {Month}, tambang bas akan dinaikkan",
         "Tayangan perdana filem itu pada {#day} haribulan depan",
     }},
    {FormatLabel::kTime,
     {
         "{subj} akan tiba pukul {#hour} {period} esok",
         "Majlis bermula jam {#hdot} {period} di {place}",
         "Kemalangan berlaku kira-kira pukul {#hdot} {period} {tail}",
         "Kedai dibuka dari jam {#hour} pagi hingga {#hour} malam",
         "Penerbangan dijadualkan berlepas pada {#hcolon} pm dari {place}",
         "Kebakaran dikesan pada jam {#hcolon} {tail}",
         "Sesi dialog akan berlangsung pada {#hdot} pagi di dewan utama",
         "Operasi dijalankan mulai pukul {#hour} tengah hari {tail}",
         "Perlawanan akan bermula {#hcolon} am waktu tempatan",
         "Mangsa ditemui kira-kira {#hdot} {period} semalam",
         "Solat jenazah diadakan selepas {#hdot} ini",
     }},
    {FormatLabel::kPhone,
     {
         "Orang ramai boleh menghubungi {#phone} untuk maklumat lanjut",
         "Sila hubungi talian {#phone} {tail}",
         "Untuk pertanyaan, hubungi tel {#phone} atau {#phonep}",
         "Aduan boleh dibuat melalui talian {#phonei} yang dibuka 24 jam",
         "Maklumat lanjut di telefon {#phone} pada waktu pejabat",
         "Penduduk diminta menghubungi {#phonep} jika ternampak suspek",
         "Hubungi {#phonei} bagi tempahan {tail}",
         "Nombor {#phone} itu tidak dapat dihubungi sejak semalam",
     }},
    {FormatLabel::kCurrency,
     {
         "Harga {item} naik kepada {#rm} sekilogram",
         "{subj} memperuntukkan {#rm} juta untuk projek itu",
         "Tiket dijual pada harga {#rmg} seorang",
         "Setiap peserta menerima {#rm} sebagai saguhati",
         "Kos pembinaan dianggarkan {#amt} ringgit {tail}",
         "Projek itu bernilai {#rm} bilion",
         "Dia didenda {#rmg} oleh mahkamah {tail}",
         "Kerugian dianggarkan berjumlah {#amt} {currency}",
         "Bayaran sebanyak {#amt} ringgit dikenakan kepada setiap pelajar",
         "Sumbangan berharga {#rm} diserahkan kepada {subj}",
         "Yuran pendaftaran ialah {#amt} ringgit sahaja",
         "Hadiah wang tunai {#rmg} menanti pemenang",
         "Jualan mencecah {#amt} juta {tail}",
     }},
    {FormatLabel::kMeasurement,
     {
         "Seramai {#cnt} orang hadir ke {event}",
         "Polis merampas {#cnt} {collective} {item} di {place}",
         "Suhu hari ini kekal pada {#cnt} darjah Celsius",
         "Jarak antara dua bandar itu ialah {#cnt} kilometer",
         "Setiap keluarga menerima {#cnt} {collective} {item}",
         "Bangunan itu setinggi {#cnt} tingkat",
         "Sebanyak {#cnt} {collective} kereta terlibat dalam kemalangan {tail}",
         "Berat bayi itu ialah {#mdec} kilogram",
         "Jambatan sepanjang {#mdec} {unit} itu siap dibina",
         "Hujan lebat mencatatkan bacaan {#cnt} {odd_unit} {tail}",
         "Ladang seluas {#mdec} {odd_unit} itu dijual",
         "{subj} menyediakan {#cnt} {collective} untuk mangsa banjir",
         "Kira-kira {#cnt} {collective} lembu mati akibat penyakit",
         "Banjir kilat setinggi {#mdec} meter melanda {place}",
         "Jumlah pelajar meningkat kepada {#cnt} tahun ini",
     }},
    {FormatLabel::kPercentage,
     {
         "Kadar inflasi meningkat {#pctd} peratus {tail}",
         "Jualan {item} jatuh {#pct} peratus berbanding tahun lalu",
         "Kira-kira {#pcts} penduduk bersetuju dengan cadangan itu",
         "Harga {item} dijangka naik antara {#pct} hingga {#pct} peratus",
         "Kadar pengangguran turun kepada {#pctd} peratus",
         "{subj} mencatatkan pertumbuhan {#pcts} {tail}",
         "Sebanyak {#pct} peratus daripada peserta adalah wanita",
         "Diskaun sehingga {#pcts} ditawarkan sempena jualan murah",
         "Faedah pinjaman kekal pada {#pctd} peratus",
         "Kehadiran pengundi mencecah {#pct} peratus di {place}",
         "Undi yang diperoleh calon itu ialah {#pcts} sahaja",
         "Keuntungan meningkat {#pct} – {#pct} peratus {tail}",
     }},
};

struct Slot {
  std::size_t start;  // code points
  std::size_t length;
  FormatLabel label;
};

struct Built {
  std::string text;
  std::vector<Slot> slots;
};

Built Expand(const std::string& tmpl, Rng& rng) {
  Built out;
  std::size_t cp = 0;
  auto append = [&](const std::string& s) {
    out.text += s;
    cp += utf8::Decode(s).size();
  };
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      const auto next = tmpl.find('{', i);
      append(tmpl.substr(i, next - i));
      i = next == std::string::npos ? tmpl.size() : next;
      continue;
    }
    const auto close = tmpl.find('}', i);
    const std::string name = tmpl.substr(i + 1, close - i - 1);
    i = close + 1;
    if (name[0] == '#') {
      auto [label, value] = Number(name.substr(1), rng);
      out.slots.push_back({cp, utf8::Decode(value).size(), label});
      append(value);
    } else if (name == "Month") {
      append(rng.Pick(kMonths));
    } else {
      append(rng.Pick(kFillers.at(name)));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic labeled corpus"};
  std::uint64_t seed = 20240521;
  int per_class = 60;
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--per-class", per_class, "Sentences drawn per format")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  Rng rng(seed);
  Corpus corpus;
  int sentence_no = 0;
  auto emit = [&](const Built& b) {
    ++sentence_no;
    const auto located = LocateNumbers(b.text);
    int row = 0;
    for (const auto& slot : b.slots) {
      const Span span{slot.start, slot.start + slot.length};
      bool found = false;
      for (const auto& tok : located) found = found || tok.span == span;
      if (!found) throw ContractError("slot does not align with a located number: " + b.text);
      char id[32];
      std::snprintf(id, sizeof id, "s%04d-%d", sentence_no, ++row);
      corpus.sentences.push_back({id, b.text, span, slot.label});
    }
  };

  for (FormatLabel label : kAllLabels) {
    const auto& templates = kTemplates.at(label);
    for (int n = 0; n < per_class; ++n) {
      // The first draw of each template is its verbatim-first expansion, so
      // every template appears at least once.
      const auto& tmpl = n < static_cast<int>(templates.size())
                             ? templates[static_cast<std::size_t>(n)]
                             : rng.Pick(templates);
      Built b = Expand(tmpl, rng);
      if (n >= static_cast<int>(templates.size()) && rng.Chance(0.3)) {
        b.text += ", " + rng.Pick(kFillers.at("tail"));
      }
      b.text += ".";
      emit(b);
    }
  }
  WriteCorpus(std::cout, corpus);
  return 0;
}
