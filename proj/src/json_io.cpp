#include "steengrass/json_io.hpp"

namespace steengrass {

json int_to_json(const Int& v)
{
    if (v.fits_slong_p())
        return static_cast<long>(v.get_si());
    return v.get_str();
}

json partition_to_json(const Partition& p)
{
    json arr = json::array();
    for (int v : p.parts())
        arr.push_back(v);
    return arr;
}

json sym_to_json(const SymElem& f)
{
    json terms = json::array();
    for (auto& [lam, c] : f.terms()) {
        json t;
        t["partition"] = partition_to_json(lam);
        t["num"] = int_to_json(c.get_num());
        t["den"] = int_to_json(c.get_den());
        terms.push_back(t);
    }
    json out;
    out["basis"] = std::string(1, basis_code(f.basis()));
    out["terms"] = terms;
    return out;
}

json boxed_to_json(const BoxedClass& b)
{
    json terms = json::array();
    for (auto& [lam, c] : b.terms) {
        json t;
        t["partition"] = partition_to_json(lam);
        t["coeff"] = int_to_json(c);
        terms.push_back(t);
    }
    json out;
    out["grass"] = json::array({b.n_rows, b.k_cols});
    out["prime"] = b.p;
    out["terms"] = terms;
    return out;
}

json poset_to_json(const AttachPoset& poset)
{
    json out;
    out["grass"] = json::array({poset.n_rows, poset.k_cols});
    out["prime"] = poset.p;
    json elems = json::array();
    for (const Partition& lam : poset.elements)
        elems.push_back(partition_to_json(lam));
    out["elements"] = elems;
    json covers = json::array();
    for (const CoverEdge& e : poset.covers) {
        json c;
        c["from"] = partition_to_json(e.from);
        c["to"] = partition_to_json(e.to);
        c["op"] = e.witness;
        covers.push_back(c);
    }
    out["covers"] = covers;
    json rel = json::array();
    for (auto& [a, b] : poset.relation)
        rel.push_back(json::array({partition_to_json(a), partition_to_json(b)}));
    out["relation"] = rel;
    return out;
}

}  // namespace steengrass
