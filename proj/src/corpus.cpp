#include "fibrenrich/corpus.hpp"

#include <vector>

namespace fibrenrich {
namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kBool = {"0", "1"};
const std::vector<std::string> kChain3 = {"0", "1", "2"};
const std::vector<std::string> kTwo = {"a", "b"};
const std::vector<std::string> kPairObjs = {"p", "q"};

// All labels are single digits, so lexicographic order is numeric order.
std::string smin(const std::string& a, const std::string& b) { return a < b ? a : b; }
std::string smax(const std::string& a, const std::string& b) { return a < b ? b : a; }
// Heyting implication y ⇒ x in a chain with the given top.
std::string imp(const std::string& y, const std::string& x, const std::string& top) {
  return y <= x ? top : x;
}
// Co-Heyting subtraction b ∖ y in a chain: least w with b ≤ w ∨ y.
std::string cosub(const std::string& b, const std::string& y) {
  return y >= b ? "0" : b;
}

json fun_rec(const std::string& name, const std::string& src, const std::string& tgt,
             json objects) {
  return json{{"name", name}, {"source", src}, {"target", tgt}, {"objects", std::move(objects)}};
}

json adj_rec(const std::string& name, const std::string& left, const std::string& right) {
  return json{{"name", name}, {"left", left}, {"right", right}};
}

json member_rec(const std::string& name, const std::string& left, const std::string& right,
                const std::string& bifunctor, const std::string& parameter) {
  json r = adj_rec(name, left, right);
  r["bifunctor"] = bifunctor;
  r["parameter"] = parameter;
  return r;
}

json thin_monoidal(const std::string& name, const std::string& cat, const std::string& tensor,
                   const std::string& unit) {
  return json{{"name", name},
              {"category", cat},
              {"tensor", tensor},
              {"unit", unit},
              {"symmetry", "thin"}};
}

json action_rec(const std::string& name, const std::string& monoidal, const std::string& carrier,
                const std::string& star) {
  return json{{"name", name}, {"monoidal", monoidal}, {"carrier", carrier}, {"star", star}};
}

json fib_rec(const std::string& name, const std::string& functor, const std::string& direction) {
  return json{{"name", name}, {"functor", functor}, {"direction", direction}};
}

json build_document() {
  json doc;

  // ---- categories ---------------------------------------------------------
  {
    json arr = json::array();
    arr.push_back({{"name", "Bool"},
                   {"objects", {"0", "1"}},
                   {"morphisms", {{"le01", "0", "1"}}}});
    arr.push_back({{"name", "Chain3"},
                   {"objects", {"0", "1", "2"}},
                   {"morphisms", {{"le01", "0", "1"}, {"le02", "0", "2"}, {"le12", "1", "2"}}},
                   {"composition", {{"le12", "le01", "le02"}}}});
    arr.push_back({{"name", "DiscTwo"}, {"objects", {"a", "b"}}});
    arr.push_back({{"name", "Idem"},
                   {"objects", {"m"}},
                   {"morphisms", {{"e", "m", "m"}}},
                   {"composition", {{"e", "e", "e"}}}});
    arr.push_back({{"name", "One"}, {"objects", {"o"}}});
    arr.push_back({{"name", "Pair"},
                   {"objects", {"p", "q"}},
                   {"morphisms", {{"u", "p", "q"}, {"v", "p", "q"}}}});
    arr.push_back({{"name", "Sign"},
                   {"objects", {"s"}},
                   {"morphisms", {{"n", "s", "s"}}},
                   {"composition", {{"n", "n", "id_s"}}}});
    arr.push_back({{"name", "Two"},
                   {"objects", {"a", "b"}},
                   {"morphisms", {{"f", "a", "b"}}}});
    doc["categories"] = std::move(arr);
  }

  // ---- functors -----------------------------------------------------------
  {
    json arr = json::array();

    json obj = json::object();
    for (const auto& x : kBool)
      for (const auto& y : kTwo) obj[pair_id(x, y)] = y;
    arr.push_back(fun_rec("pi2", "prod(Bool,Two)", "Two", std::move(obj)));

    obj = json::object();
    for (const auto& x : kBool)
      for (const auto& y : kBool) obj[pair_id(x, y)] = y;
    arr.push_back(fun_rec("pi", "prod(Bool,Bool)", "Bool", std::move(obj)));

    obj = json::object();
    for (const auto& x : kBool)
      for (const auto& y : kPairObjs) obj[pair_id(x, y)] = y;
    json rec = fun_rec("pairpi2", "prod(Bool,Pair)", "Pair", std::move(obj));
    json mor = json::object();
    for (const std::string f : {"id_0", "id_1", "le01"})
      for (const std::string g : {"id_p", "id_q", "u", "v"}) mor[pair_id(f, g)] = g;
    rec["morphisms"] = std::move(mor);
    arr.push_back(std::move(rec));

    arr.push_back(fun_rec("h", "Chain3", "Bool", {{"0", "0"}, {"1", "1"}, {"2", "1"}}));
    arr.push_back(fun_rec("G", "Bool", "Chain3", {{"0", "0"}, {"1", "2"}}));
    arr.push_back(fun_rec("d2t", "DiscTwo", "Two", {{"a", "a"}, {"b", "b"}}));
    arr.push_back(fun_rec("bangBool", "Bool", "One", {{"0", "o"}, {"1", "o"}}));
    arr.push_back(fun_rec("const1Bool", "Bool", "Bool", {{"0", "1"}, {"1", "1"}}));
    arr.push_back(fun_rec("constbTwo", "Two", "Two", {{"a", "b"}, {"b", "b"}}));

    obj = json::object();
    for (const auto& x : kBool)
      for (const auto& y : kBool) obj[pair_id(x, y)] = smin(x, y);
    arr.push_back(fun_rec("meet", "prod(Bool,Bool)", "Bool", std::move(obj)));

    obj = json::object();
    for (const auto& x : kChain3)
      for (const auto& y : kChain3) obj[pair_id(x, y)] = smin(x, y);
    arr.push_back(fun_rec("meet3", "prod(Chain3,Chain3)", "Chain3", std::move(obj)));

    obj = json::object();
    for (const auto& a : kBool)
      for (const auto& b : kBool)
        for (const auto& c : kBool)
          for (const auto& d : kBool)
            obj[pair_id(pair_id(a, b), pair_id(c, d))] = pair_id(smin(a, c), smin(b, d));
    arr.push_back(fun_rec("bbmeet", "prod(prod(Bool,Bool),prod(Bool,Bool))", "prod(Bool,Bool)",
                          std::move(obj)));

    obj = json::object();
    for (const auto& x : kBool)
      for (const auto& y : kBool) obj[pair_id(x, y)] = smax(x, y);
    arr.push_back(fun_rec("joinOp", "prod(op(Bool),op(Bool))", "op(Bool)", std::move(obj)));

    obj = json::object();
    for (const auto& x : kChain3)
      for (const auto& y : kChain3) obj[pair_id(x, y)] = smax(x, y);
    arr.push_back(fun_rec("join3Op", "prod(op(Chain3),op(Chain3))", "op(Chain3)", std::move(obj)));

    rec = fun_rec("sgn", "prod(Sign,Sign)", "Sign", {{pair_id("s", "s"), "s"}});
    rec["morphisms"] = json{{pair_id("id_s", "id_s"), "id_s"},
                            {pair_id("id_s", "n"), "n"},
                            {pair_id("n", "id_s"), "n"},
                            {pair_id("n", "n"), "id_s"}};
    arr.push_back(std::move(rec));

    rec = fun_rec("idem", "prod(Idem,Idem)", "Idem", {{pair_id("m", "m"), "m"}});
    rec["morphisms"] = json{{pair_id("id_m", "id_m"), "id_m"},
                            {pair_id("id_m", "e"), "e"},
                            {pair_id("e", "id_m"), "e"},
                            {pair_id("e", "e"), "e"}};
    arr.push_back(std::move(rec));

    obj = json::object();
    for (const auto& x : kBool)
      for (const auto& d : kChain3) obj[pair_id(x, d)] = x == "1" ? d : "0";
    arr.push_back(fun_rec("star3", "prod(Bool,Chain3)", "Chain3", std::move(obj)));

    rec = fun_rec("sgnAts", "Sign", "Sign", {{"s", "s"}});
    rec["morphisms"] = json{{"n", "n"}};
    arr.push_back(std::move(rec));

    for (const auto& y : kBool) {
      json l = json::object(), r = json::object();
      for (const auto& x : kBool) {
        l[x] = smin(x, y);
        r[x] = imp(y, x, "1");
      }
      arr.push_back(fun_rec("meetAt" + y, "Bool", "Bool", std::move(l)));
      arr.push_back(fun_rec("impBool" + y, "Bool", "Bool", std::move(r)));
    }
    for (const auto& y : kChain3) {
      json l = json::object(), r = json::object();
      for (const auto& x : kChain3) {
        l[x] = smin(x, y);
        r[x] = imp(y, x, "2");
      }
      arr.push_back(fun_rec("meet3At" + y, "Chain3", "Chain3", std::move(l)));
      arr.push_back(fun_rec("imp3At" + y, "Chain3", "Chain3", std::move(r)));
    }
    for (const auto& c : kBool)
      for (const auto& d : kBool) {
        json l = json::object(), r = json::object();
        for (const auto& a : kBool)
          for (const auto& b : kBool) {
            l[pair_id(a, b)] = pair_id(smin(a, c), smin(b, d));
            r[pair_id(a, b)] = pair_id(imp(c, a, "1"), imp(d, b, "1"));
          }
        arr.push_back(
            fun_rec("bbmeetAt" + c + d, "prod(Bool,Bool)", "prod(Bool,Bool)", std::move(l)));
        arr.push_back(
            fun_rec("bbimpAt" + c + d, "prod(Bool,Bool)", "prod(Bool,Bool)", std::move(r)));
      }
    for (const auto& y : kBool) {
      json l = json::object(), r = json::object();
      for (const auto& x : kBool) {
        l[x] = smax(x, y);
        r[x] = cosub(x, y);
      }
      arr.push_back(fun_rec("joinOpAt" + y, "op(Bool)", "op(Bool)", std::move(l)));
      arr.push_back(fun_rec("subOpAt" + y, "op(Bool)", "op(Bool)", std::move(r)));
    }
    for (const auto& y : kChain3) {
      json l = json::object(), r = json::object();
      for (const auto& x : kChain3) {
        l[x] = smax(x, y);
        r[x] = cosub(x, y);
      }
      arr.push_back(fun_rec("join3OpAt" + y, "op(Chain3)", "op(Chain3)", std::move(l)));
      arr.push_back(fun_rec("sub3OpAt" + y, "op(Chain3)", "op(Chain3)", std::move(r)));
    }
    for (const auto& d : kChain3) {
      json l = json::object(), r = json::object();
      for (const auto& x : kBool) l[x] = x == "1" ? d : "0";
      for (const auto& x : kChain3) r[x] = d <= x ? "1" : "0";
      arr.push_back(fun_rec("star3At" + d, "Bool", "Chain3", std::move(l)));
      arr.push_back(fun_rec("homBC" + d, "Chain3", "Bool", std::move(r)));
    }
    doc["functors"] = std::move(arr);
  }

  // ---- transformations ------------------------------------------------------
  {
    json arr = json::array();
    arr.push_back({{"name", "collapse"},
                   {"source", "id(Two)"},
                   {"target", "constbTwo"},
                   {"components", "thin"}});
    doc["transformations"] = std::move(arr);
  }

  // ---- adjunctions ----------------------------------------------------------
  {
    json arr = json::array();
    arr.push_back(adj_rec("HAdj", "h", "G"));
    for (const auto& y : kBool)
      arr.push_back(member_rec("impB" + y, "meetAt" + y, "impBool" + y, "meet", y));
    for (const auto& y : kChain3)
      arr.push_back(member_rec("impC" + y, "meet3At" + y, "imp3At" + y, "meet3", y));
    for (const auto& c : kBool)
      for (const auto& d : kBool)
        arr.push_back(member_rec("impBB" + c + d, "bbmeetAt" + c + d, "bbimpAt" + c + d, "bbmeet",
                                 pair_id(c, d)));
    for (const auto& y : kBool)
      arr.push_back(member_rec("subB" + y, "joinOpAt" + y, "subOpAt" + y, "joinOp", y));
    for (const auto& y : kChain3)
      arr.push_back(member_rec("subC" + y, "join3OpAt" + y, "sub3OpAt" + y, "join3Op", y));
    for (const auto& d : kChain3)
      arr.push_back(member_rec("starBC" + d, "star3At" + d, "homBC" + d, "star3", d));
    json sgnSelf = member_rec("sgnSelf", "sgnAts", "sgnAts", "sgn", "s");
    sgnSelf["unit"] = json{{"s", "id_s"}};
    sgnSelf["counit"] = json{{"s", "id_s"}};
    arr.push_back(std::move(sgnSelf));
    doc["adjunctions"] = std::move(arr);
  }

  // ---- monoidal ---------------------------------------------------------------
  {
    json arr = json::array();
    arr.push_back(thin_monoidal("BoolMeet", "Bool", "meet", "1"));
    arr.push_back(thin_monoidal("Chain3Meet", "Chain3", "meet3", "2"));
    arr.push_back(thin_monoidal("BBMeet", "prod(Bool,Bool)", "bbmeet", pair_id("1", "1")));
    arr.push_back(thin_monoidal("BoolJoin", "op(Bool)", "joinOp", "0"));
    arr.push_back(thin_monoidal("Chain3Join", "op(Chain3)", "join3Op", "0"));
    arr.push_back({{"name", "SignMon"},
                   {"category", "Sign"},
                   {"tensor", "sgn"},
                   {"unit", "s"},
                   {"associator", {{"s", "s", "s", "id_s"}}},
                   {"left_unitor", {{"s", "id_s"}}},
                   {"right_unitor", {{"s", "id_s"}}},
                   {"symmetry", {{"s", "s", "id_s"}}}});
    arr.push_back({{"name", "IdemMon"},
                   {"category", "Idem"},
                   {"tensor", "idem"},
                   {"unit", "m"},
                   {"associator", {{"m", "m", "m", "id_m"}}},
                   {"left_unitor", {{"m", "id_m"}}},
                   {"right_unitor", {{"m", "id_m"}}}});
    doc["monoidal"] = std::move(arr);
  }

  // ---- actions ------------------------------------------------------------------
  {
    json arr = json::array();
    arr.push_back(action_rec("RegBool", "BoolMeet", "Bool", "meet"));
    arr.push_back(action_rec("RegChain3", "Chain3Meet", "Chain3", "meet3"));
    arr.push_back(action_rec("RegBB", "BBMeet", "prod(Bool,Bool)", "bbmeet"));
    arr.push_back(action_rec("RegBoolJoin", "BoolJoin", "op(Bool)", "joinOp"));
    arr.push_back(action_rec("RegChain3Join", "Chain3Join", "op(Chain3)", "join3Op"));
    json sign = action_rec("RegSign", "SignMon", "Sign", "sgn");
    sign["mixer"] = json::array({json::array({"s", "s", "s", "id_s"})});
    sign["unitor"] = json{{"s", "id_s"}};
    arr.push_back(std::move(sign));
    json idem = action_rec("RegIdem", "IdemMon", "Idem", "idem");
    idem["mixer"] = json::array({json::array({"m", "m", "m", "id_m"})});
    idem["unitor"] = json{{"m", "id_m"}};
    arr.push_back(std::move(idem));
    arr.push_back(action_rec("BoolOnChain3", "BoolMeet", "Chain3", "star3"));
    doc["actions"] = std::move(arr);
  }

  // ---- fibrations -----------------------------------------------------------------
  {
    json arr = json::array();
    arr.push_back(fib_rec("Proj2", "pi2", "fibration"));
    arr.push_back(fib_rec("Pi", "pi", "fibration"));
    arr.push_back(fib_rec("PairProj", "pairpi2", "fibration"));
    arr.push_back(fib_rec("HFib", "h", "fibration"));
    arr.push_back(fib_rec("GFib", "G", "fibration"));
    arr.push_back(fib_rec("DiscToTwo", "d2t", "fibration"));
    arr.push_back(fib_rec("BangBool", "bangBool", "fibration"));
    arr.push_back(fib_rec("IdBool", "id(Bool)", "fibration"));
    arr.push_back(fib_rec("IdChain3", "id(Chain3)", "fibration"));
    arr.push_back(fib_rec("IdSign", "id(Sign)", "fibration"));
    arr.push_back(fib_rec("IdBoolJoin", "id(op(Bool))", "opfibration"));
    arr.push_back(fib_rec("IdChain3Join", "id(op(Chain3))", "opfibration"));
    arr.push_back(fib_rec("UpChain3", "id(Chain3)", "opfibration"));
    arr.push_back(fib_rec("VBool", "id(Bool)", "opfibration"));
    arr.push_back({{"name", "GrConstBoolTwo"},
                   {"grothendieck",
                    {{"base", "Two"},
                     {"fibres", {{"a", "Bool"}, {"b", "Bool"}}},
                     {"reindex", {{"f", "id(Bool)"}}}}}});
    arr.push_back({{"name", "GrTwist"},
                   {"grothendieck",
                    {{"base", "Two"},
                     {"fibres", {{"a", "Bool"}, {"b", "Bool"}}},
                     {"reindex", {{"f", "const1Bool"}}}}}});
    arr.push_back({{"name", "GrPair"},
                   {"grothendieck",
                    {{"base", "Two"},
                     {"fibres", {{"a", "Pair"}, {"b", "Pair"}}},
                     {"reindex", {{"f", "id(Pair)"}}}}}});
    arr.push_back({{"name", "GrHChain"},
                   {"grothendieck",
                    {{"base", "Bool"},
                     {"fibres", {{"0", "Bool"}, {"1", "Chain3"}}},
                     {"reindex", {{"le01", "h"}}}}}});
    doc["fibrations"] = std::move(arr);
  }

  // ---- monoidal fibrations ------------------------------------------------------
  {
    json arr = json::array();
    auto mf = [](const std::string& name, const std::string& fib, const std::string& total,
                 const std::string& base) {
      return json{{"name", name}, {"fibration", fib}, {"total", total}, {"base", base}};
    };
    arr.push_back(mf("MFIdBool", "IdBool", "BoolMeet", "BoolMeet"));
    arr.push_back(mf("MFIdChain3", "IdChain3", "Chain3Meet", "Chain3Meet"));
    arr.push_back(mf("MFPi", "Pi", "BBMeet", "BoolMeet"));
    arr.push_back(mf("MFIdSign", "IdSign", "SignMon", "SignMon"));
    arr.push_back(mf("MFIdBoolJoin", "IdBoolJoin", "BoolJoin", "BoolJoin"));
    arr.push_back(mf("MFIdChain3Join", "IdChain3Join", "Chain3Join", "Chain3Join"));
    doc["monoidal_fibrations"] = std::move(arr);
  }

  // ---- representations ------------------------------------------------------------
  {
    json arr = json::array();
    auto rep = [](const std::string& name, const std::string& mf, const std::string& fib,
                  const std::string& total, const std::string& base) {
      return json{{"name", name},
                  {"monoidal_fibration", mf},
                  {"fibration", fib},
                  {"total_action", total},
                  {"base_action", base}};
    };
    arr.push_back(rep("RegIdBool", "MFIdBool", "IdBool", "RegBool", "RegBool"));
    arr.push_back(rep("RegIdChain3", "MFIdChain3", "IdChain3", "RegChain3", "RegChain3"));
    arr.push_back(rep("RegBoolSq", "MFPi", "Pi", "RegBB", "RegBool"));
    arr.push_back(rep("RegIdSign", "MFIdSign", "IdSign", "RegSign", "RegSign"));
    arr.push_back(rep("RegIdBoolJoin", "MFIdBoolJoin", "IdBoolJoin", "RegBoolJoin", "RegBoolJoin"));
    arr.push_back(
        rep("RegIdChain3Join", "MFIdChain3Join", "IdChain3Join", "RegChain3Join", "RegChain3Join"));
    doc["representations"] = std::move(arr);
  }

  // ---- enrichments ------------------------------------------------------------------
  {
    json arr = json::array();
    json hom = json::array();
    for (const auto& a : kBool)
      for (const auto& b : kBool) hom.push_back(json::array({a, b, imp(a, b, "1")}));
    arr.push_back({{"name", "BoolSelf"},
                   {"monoidal", "BoolMeet"},
                   {"objects", {"0", "1"}},
                   {"hom", std::move(hom)}});
    hom = json::array();
    for (const auto& a : kChain3)
      for (const auto& b : kChain3) hom.push_back(json::array({a, b, imp(a, b, "2")}));
    arr.push_back({{"name", "Chain3Self"},
                   {"monoidal", "Chain3Meet"},
                   {"objects", {"0", "1", "2"}},
                   {"hom", std::move(hom)}});
    arr.push_back({{"name", "SignSelf"},
                   {"monoidal", "SignMon"},
                   {"objects", {"s"}},
                   {"hom", {{"s", "s", "s"}}},
                   {"compose", {{"s", "s", "s", "id_s"}}},
                   {"identities", {{"s", "id_s"}}}});
    arr.push_back({{"name", "SignTwist"},
                   {"monoidal", "SignMon"},
                   {"objects", {"s"}},
                   {"hom", {{"s", "s", "s"}}},
                   {"compose", {{"s", "s", "s", "n"}}},
                   {"identities", {{"s", "n"}}}});
    doc["enrichments"] = std::move(arr);
  }

  // ---- enriched fibrations ------------------------------------------------------------
  {
    json arr = json::array();
    arr.push_back({{"name", "EFIdBool"},
                   {"monoidal_fibration", "MFIdBool"},
                   {"fibration", "IdBool"},
                   {"total", "BoolSelf"},
                   {"base", "BoolSelf"}});
    arr.push_back({{"name", "EFIdChain3"},
                   {"monoidal_fibration", "MFIdChain3"},
                   {"fibration", "IdChain3"},
                   {"total", "Chain3Self"},
                   {"base", "Chain3Self"}});
    arr.push_back({{"name", "EFIdSign"},
                   {"monoidal_fibration", "MFIdSign"},
                   {"fibration", "IdSign"},
                   {"total", "SignSelf"},
                   {"base", "SignSelf"},
                   {"total_witness", {{"n", {"s", "n", "s"}}}},
                   {"base_witness", {{"n", {"s", "n", "s"}}}}});
    arr.push_back({{"name", "EFSignTwist"},
                   {"monoidal_fibration", "MFIdSign"},
                   {"fibration", "IdSign"},
                   {"total", "SignSelf"},
                   {"base", "SignTwist"},
                   {"total_witness", {{"n", {"s", "n", "s"}}}},
                   {"base_witness", {{"n", {"s", "id_s", "s"}}}}});
    doc["enriched_fibrations"] = std::move(arr);
  }

  return doc;
}

}  // namespace

const std::string& corpus_document() {
  static const std::string text = build_document().dump(2) + "\n";
  return text;
}

const Workspace& corpus() {
  static const Workspace ws = parse_workspace(corpus_document());
  return ws;
}

}  // namespace fibrenrich
