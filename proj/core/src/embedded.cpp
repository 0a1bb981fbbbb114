#include <optional>

#include "qconcept/dataset.hpp"

namespace qc {
namespace {

constexpr auto C = Connective::Conjunction;
constexpr auto D = Connective::Disjunction;
constexpr auto kC = Label::Classical;
constexpr auto kD = Label::DeltaNonclassical;

struct PairInfo {
  const char* id;
  const char* a;
  const char* b;
  Connective c;
};

constexpr PairInfo kPairs[] = {
    {"furniture_household_appliances", "Furniture", "Household Appliances", C},
    {"food_plant", "Food", "Plant", C},
    {"weapon_tool", "Weapon", "Tool", C},
    {"building_dwelling", "Building", "Dwelling", C},
    {"machine_vehicle", "Machine", "Vehicle", C},
    {"bird_pet", "Bird", "Pet", C},
    {"house_furnishings_furniture", "House Furnishings", "Furniture", D},
    {"hobbies_games", "Hobbies", "Games", D},
    {"pets_farmyard_animals", "Pets", "Farmyard Animals", D},
    {"spices_herbs", "Spices", "Herbs", D},
    {"instruments_tool", "Instruments", "Tool", D},
    {"sportswear_sports_equipment", "Sportswear", "Sports Equipment", D},
    {"household_appliances_kitchen_utensils", "Household Appliances", "Kitchen Utensils", D},
    {"fruits_vegetables", "Fruits", "Vegetables", D},
    {"exam_outcome", "Passed Exam", "Failed Exam", D},
};

Connective connective_of(const std::string& id) {
  for (const auto& p : kPairs) {
    if (id == p.id) return p.c;
  }
  return C;
}

PrintedRow row(const char* pair, const char* item, double a, double b, double combo, Label l,
               double delta, double k) {
  PrintedRow r;
  r.pair_id = pair;
  r.item = item;
  r.t = {a, b, combo, connective_of(pair)};
  r.label = l;
  r.delta = delta;
  r.k = k;
  return r;
}

PrintedRow with_c3(PrintedRow r, std::array<double, 3> va, std::array<double, 3> vb,
                   double beta) {
  r.c3 = PrintedC3{va, vb, beta};
  return r;
}

PrintedRow with_fock(PrintedRow r, double m2, double two, double n2, double one) {
  r.fock = PrintedFock{m2, n2, two, one};
  return r;
}

struct Extra {
  const char* pair;
  const char* item;
  double a, b, combo;
};

// Items quoted in the running text rather than in the tables.
constexpr Extra kExtras[] = {
    {"furniture_household_appliances", "TV", 0.7, 0.9, 0.925},
    {"building_dwelling", "Library", 0.95, 0.175, 0.3077},
    {"machine_vehicle", "Sailboat", 0.5641, 0.8, 0.4211},
    {"machine_vehicle", "Raft", 0.205128, 0.725, 0.2},
    {"machine_vehicle", "Backpack", 0.0, 0.0, 0.0},
    {"machine_vehicle", "Automobile", 1.0, 1.0, 1.0},
    {"machine_vehicle", "Bus", 1.0, 1.0, 1.0},
    {"machine_vehicle", "Horse Cart", 0.3846, 0.95, 0.2895},
    {"machine_vehicle", "Dishwasher", 1.0, 0.025, 0.0},
    {"hobbies_games", "Discus Throwing", 1.0, 0.75, 0.7},
    {"spices_herbs", "MSG", 0.15, 0.1, 0.425},
    {"spices_herbs", "Sugar", 0.0, 0.0, 0.2},
    {"spices_herbs", "Poppyseeds", 0.4, 0.4, 0.4},
    {"sportswear_sports_equipment", "Diving Mask", 1.0, 1.0, 0.95},
    {"fruits_vegetables", "Almond", 0.2, 0.1, 0.425},
    {"exam_outcome", "Hawaii", 0.54, 0.57, 0.32},
};

}  // namespace

std::vector<PrintedRow> printed_table_rows() {
  std::vector<PrintedRow> r;
  r.reserve(46);
  // Conjunctions.
  r.push_back(with_c3(row("furniture_household_appliances", "Desk Lamp", 0.725, 0.825, 0.825, kD, 0.1, 0.275),
                      {0.8515, 0, 0.5244}, {0.2576, 0.8710, -0.4183}, 76.8253));
  r.push_back(with_fock(row("furniture_household_appliances", "Coffee Table", 1, 0.15, 0.3846, kD, 0.2346, 0.2346),
                        0.4480, 0.15, 0.5520, 0.575));
  r.push_back(with_fock(row("furniture_household_appliances", "Painting", 0.6154, 0.0513, 0.1053, kD, 0.0540, 0.4386),
                        0.7558, 0.0316, 0.2442, 0.3333));
  r.push_back(with_c3(row("food_plant", "Peppercorn", 0.875, 0.6207, 0.7586, kD, 0.1379, 0.2629),
                      {0.9354, 0, 0.3536}, {0.2328, 0.7527, -0.6159}, 87.1634));
  r.push_back(with_fock(row("food_plant", "Sponge", 0.0263, 0.3421, 0.0882, kD, 0.0619, 0.7198),
                        0.5478, 0.0090, 0.4522, 0.1842));
  r.push_back(with_fock(row("weapon_tool", "Toothbrush", 0, 0.55, 0, kC, 0, 0.45), 1, 0, 0, 0.275));
  r.push_back(with_c3(row("weapon_tool", "Chisel", 0.4, 0.975, 0.6410, kD, 0.2410, 0.2660),
                      {0.6325, 0, 0.7746}, {0.1936, 0.9682, -0.1581}, 112.3003));
  r.push_back(with_fock(row("building_dwelling", "Cave", 0.2821, 0.95, 0.2821, kC, 0, 0.05),
                        0.9595, 0.2679, 0.0405, 0.6160));
  r.push_back(with_c3(row("building_dwelling", "Tree House", 0.5, 0.9, 0.95, kC, -0.05, 0.45),
                      {0.8771, 0, 0.4804}, {0.2148, 0.8944, -0.3922}, 77.0244));
  r.push_back(with_fock(row("machine_vehicle", "Dogsled", 0.1795, 0.925, 0.275, kD, 0.0955, 0.1705),
                        0.7178, 0.1660, 0.2822, 0.5522));
  r.push_back(with_c3(row("machine_vehicle", "Course Liner", 0.875, 0.875, 0.95, kD, 0.075, 0.2),
                      {0.9354, 0, 0.3536}, {0.1336, 0.9258, -0.3536}, 53.1301));
  r.push_back(with_fock(row("bird_pet", "Lark", 1, 0.275, 0.4872, kD, 0.2122, 0.2122),
                        0.4147, 0.275, 0.5853, 0.6375));
  r.push_back(with_fock(row("bird_pet", "Elephant", 0, 0.25, 0, kC, 0, 0.75), 1, 0, 0, 0.125));

  // Disjunctions.
  r.push_back(with_fock(row("house_furnishings_furniture", "Wall-Hanging", 0.9, 0.4, 0.95, kC, -0.05, 0.35), 1, 0.94, 0, 0.65));
  r.push_back(with_fock(row("house_furnishings_furniture", "Door Bell", 0.5, 0.1, 0.55, kC, -0.05, 0.05), 1, 0.55, 0, 0.3));
  r.push_back(with_c3(row("house_furnishings_furniture", "Ashtray", 0.7, 0.3, 0.25, kD, 0.45, 0.75),
                      {0.8367, 0, 0.5477}, {0.5477, 0, -0.8367}, 123.0619));
  r.push_back(with_c3(row("house_furnishings_furniture", "Sink Unit", 0.9, 0.6, 0.6, kD, 0.3, 0.9),
                      {0.9487, 0, 0.3162}, {0.2108, 0.7454, -0.6325}, 138.5904));
  r.push_back(with_fock(row("hobbies_games", "Gardening", 1, 0, 1, kC, 0, 0), 1, 1, 0, 0.5));
  r.push_back(with_c3(row("hobbies_games", "Beer Drinking", 0.8, 0.2, 0.575, kD, 0.225, 0.425),
                      {0.4472, 0, 0.8944}, {0.8421, 0.3015, -0.4472}, 79.1931));
  r.push_back(with_fock(row("hobbies_games", "Stamp Collection", 1, 0.1, 1, kC, 0, 0.1), 1, 1, 0, 0.55));
  r.push_back(with_c3(row("hobbies_games", "Wrestling", 0.9, 0.6, 0.625, kD, 0.275, 0.875),
                      {0.9487, 0, 0.3162}, {0.2108, 0.7454, -0.6325}, 126.8699));
  r.push_back(with_fock(row("pets_farmyard_animals", "Collie Dog", 1, 0.7, 1, kC, 0, 0.7), 1, 1, 0, 0.85));
  r.push_back(with_c3(row("pets_farmyard_animals", "Rat", 0.5, 0.7, 0.4, kD, 0.3, 0.8),
                      {0.7071, 0, 0.7071}, {0.5477, 0.6325, -0.5477}, 121.0909));
  r.push_back(with_c3(row("pets_farmyard_animals", "Field Mouse", 0.1, 0.7, 0.4, kD, 0.3, 0.4),
                      {0.9487, 0, 0.3162}, {0.2789, 0.4714, -0.8367}, 90.0));
  r.push_back(with_fock(row("spices_herbs", "Molasses", 0.4, 0.05, 0.425, kC, -0.025, 0.025), 0.9756, 0.43, 0.0244, 0.225));
  r.push_back(with_c3(row("spices_herbs", "Salt", 0.75, 0.1, 0.6, kD, 0.15, 0.25),
                      {0.5, 0, 0.8660}, {0.5477, 0.7746, -0.3162}, 50.2820));
  r.push_back(with_c3(row("spices_herbs", "Curry", 0.9, 0.4, 0.75, kD, 0.15, 0.55),
                      {0.9487, 0, 0.3162}, {0.2582, 0.5774, -0.7746}, 65.9052));
  r.push_back(with_fock(row("spices_herbs", "Parsley", 0.5, 0.9, 0.95, kC, -0.05, 0.45), 1, 0.95, 0, 0.7));
  r.push_back(with_c3(row("instruments_tool", "Pencil Eraser", 0.4, 0.7, 0.45, kD, 0.25, 0.65),
                      {0.6325, 0, 0.7746}, {0.6708, 0.5, -0.5477}, 103.6330));
  r.push_back(with_c3(row("instruments_tool", "Computer", 0.6, 0.8, 0.6, kD, 0.2, 0.8),
                      {0.7746, 0, 0.6325}, {0.3651, 0.8165, -0.4472}, 110.7048));
  r.push_back(with_c3(row("instruments_tool", "Spoon", 0.65, 0.9, 0.7, kD, 0.2, 0.85),
                      {0.8185, 0, 0.5745}, {0.2219, 0.9224, -0.3162}, 117.8987));
  r.push_back(with_fock(row("instruments_tool", "Pliers", 0.8, 1, 1, kC, 0, 0.8), 1, 1, 0, 0.9));
  r.push_back(with_c3(row("sportswear_sports_equipment", "Sunglasses", 0.4, 0.2, 0.1, kD, 0.3, 0.5),
                      {0.7746, 0, 0.6325}, {0.3651, 0.8165, -0.4472}, 135.0));
  r.push_back(with_fock(row("sportswear_sports_equipment", "Golf Ball", 0.1, 1, 1, kC, 0, 0.1), 1, 1, 0, 0.55));
  r.push_back(with_fock(row("sportswear_sports_equipment", "Sailing Life Jacket", 1, 0.8, 1, kC, 0, 0.8), 1, 1, 0, 0.9));
  r.push_back(with_fock(row("sportswear_sports_equipment", "Tennis Racket", 0.2, 1, 1, kC, 0, 0.2), 1, 1, 0, 0.6));
  r.push_back(with_c3(row("household_appliances_kitchen_utensils", "Cake Tin", 0.4, 0.7, 0.95, kC, -0.25, 0.15),
                      {0.7071, 0, 0.7071}, {0.7071, 0, -0.7071}, 53.1301));
  r.push_back(with_fock(row("household_appliances_kitchen_utensils", "Cooking Stove", 1, 0.5, 1, kC, 0, 0.5), 1, 1, 0, 0.75));
  r.push_back(with_c3(row("household_appliances_kitchen_utensils", "Rubbish Bin", 0.5, 0.5, 0.8, kC, -0.3, 0.2),
                      {0.6325, 0, 0.7746}, {0.6708, 0.5, -0.5477}, 19.4712));
  r.push_back(with_fock(row("household_appliances_kitchen_utensils", "Spatula", 0.55, 0.9, 0.95, kC, -0.05, 0.5), 0.9783, 0.955, 0.0217, 0.725));
  r.push_back(with_fock(row("fruits_vegetables", "Apple", 1, 0, 1, kC, 0, 0), 1, 1, 0, 0.5));
  r.push_back(with_fock(row("fruits_vegetables", "Chili Pepper", 0.05, 0.5, 0.5, kC, 0, 0.05), 0.9, 0.525, 0.1, 0.275));
  r.push_back(with_fock(row("fruits_vegetables", "Raisin", 1, 0, 0.9, kD, 0.1, 0.1), 0.8, 1, 0.2, 0.5));
  r.push_back(with_c3(row("fruits_vegetables", "Tomato", 0.7, 0.7, 1, kC, -0.3, 0.4),
                      {0.7348, 0, 0.6782}, {0.6052, 0.4513, -0.6557}, 121.8967));
  r.push_back(with_fock(row("fruits_vegetables", "Peanut", 0.3, 0.1, 0.4, kC, -0.1, 0), 1, 0.37, 0, 0.2));
  r.push_back(with_fock(row("fruits_vegetables", "Elderberry", 1, 0, 0.8, kD, 0.2, 0.2), 0.6, 1, 0.4, 0.5));
  return r;
}

Dataset embedded_samples() {
  Dataset d;
  for (const auto& p : kPairs) d.pairs.push_back({p.id, p.a, p.b, p.c, {}});
  auto add = [&](const std::string& pair, const std::string& item, MembershipTriple t) {
    for (auto& p : d.pairs) {
      if (p.pair_id == pair) {
        t.connective = p.connective;
        p.items.push_back({item, t});
      }
    }
  };
  for (const auto& r : printed_table_rows()) add(r.pair_id, r.item, r.t);
  for (const auto& e : kExtras) add(e.pair, e.item, {e.a, e.b, e.combo, C});
  return d;
}

}  // namespace qc
