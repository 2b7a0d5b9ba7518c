// Generated by scripts/make_fixture.py; do not edit by hand.
import type { ReportRecord } from "./types.js";

export const FIXTURE_RECORDS: ReportRecord[] = [
  {
    "ablation": "full",
    "attribution": {
      "awrs": 87.3,
      "baseline": 50.0,
      "interactions": [
        [
          0.0,
          -0.5304765814961476,
          -0.16668409149934155,
          -0.5174276126194636
        ],
        [
          -0.5304765814961476,
          0.0,
          -0.3383917201516214,
          -1.0442157844461761
        ],
        [
          -0.16668409149934155,
          -0.3383917201516214,
          0.0,
          -0.33004167743051593
        ],
        [
          -0.5174276126194636,
          -1.0442157844461761,
          -0.33004167743051593,
          0.0
        ]
      ],
      "shapley": {
        "contradiction": 6.677836539590229,
        "grounding_deficit": 13.013818732785003,
        "intensity": 4.275996056740234,
        "support_deficit": 13.332348670884526
      }
    },
    "awrs": 87.3,
    "claims": [
      {
        "cci_share": 0.05675997024254382,
        "claim_id": "F0000-2023Q1-doc1:3:9",
        "confidence": 0.6028701423284373,
        "contradiction": 0.34765016759212136,
        "intensity": 0.6666666666666666,
        "pairs": [
          {
            "decisive": true,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.891,
            "p_entail": 0.0436,
            "p_neutral": 0.0654,
            "similarity": -0.009897594780811198,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.34007891894074815,
            "p_entail": 0.3261996513135798,
            "p_neutral": 0.3337214297456721,
            "similarity": -0.025604577824959455,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33655682287736727,
            "p_entail": 0.3228587588146337,
            "p_neutral": 0.34058441830799907,
            "similarity": 0.05128812124138864,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.3261996513135798,
        "text": "document routing system is fully deployed",
        "weight": 0.0558621000498414
      },
      {
        "cci_share": 0.05664367914930367,
        "claim_id": "F0000-2023Q1-doc0:3:8",
        "confidence": 0.6031960493144465,
        "contradiction": 0.3467504435367699,
        "intensity": 0.3333333333333333,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.3467504435367699,
            "p_entail": 0.31994830894936827,
            "p_neutral": 0.3333012475138618,
            "similarity": -0.032826608214930636,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.3391922732836417,
            "p_entail": 0.3258100738006987,
            "p_neutral": 0.3349976529156596,
            "similarity": -0.03774256780481985,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3356661285629284,
            "p_entail": 0.3224604604641573,
            "p_neutral": 0.34187341097291435,
            "similarity": 0.04536092116265144,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.3258100738006987,
        "text": "document routing engine is operational",
        "weight": 0.055892298673692754
      },
      {
        "cci_share": 0.056386559673258056,
        "claim_id": "F0000-2023Q1-doc2:3:5",
        "confidence": 0.6037823000893298,
        "contradiction": 0.34484130483850783,
        "intensity": 0.3333333333333333,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34484130483850783,
            "p_entail": 0.31879170916005367,
            "p_neutral": 0.3363669860014384,
            "similarity": 0.03790490217894517,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33731259584924445,
            "p_entail": 0.32462058872439115,
            "p_neutral": 0.33806681542636435,
            "similarity": -0.016343011261515335,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3337743620967719,
            "p_entail": 0.3212527613135776,
            "p_neutral": 0.3449728765896506,
            "similarity": 0.03928371006591931,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.32462058872439115,
        "text": "rolled out",
        "weight": 0.05594662081894669
      },
      {
        "cci_share": 0.05638314094447272,
        "claim_id": "F0000-2023Q1-doc2:2:3",
        "confidence": 0.6019309370081728,
        "contradiction": 0.34588096348166697,
        "intensity": 0.3333333333333333,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34588096348166697,
            "p_entail": 0.3198796712346159,
            "p_neutral": 0.33423936528371717,
            "similarity": -0.032826608214930636,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.3383341432414269,
            "p_entail": 0.32573285954828535,
            "p_neutral": 0.33593299721028774,
            "similarity": -0.02830692585361489,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33480723929425305,
            "p_entail": 0.3223747193985523,
            "p_neutral": 0.3428180413071946,
            "similarity": 0.0,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.32573285954828535,
        "text": "completely",
        "weight": 0.05577507304703559
      },
      {
        "cci_share": 0.056262290275549146,
        "claim_id": "F0000-2023Q1-doc0:8:17",
        "confidence": 0.6035785799630498,
        "contradiction": 0.3441974493298314,
        "intensity": 0.6666666666666666,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.3441974493298314,
            "p_entail": 0.3229785539948784,
            "p_neutral": 0.3328239966752903,
            "similarity": 0.06369297552984819,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.33665832019835923,
            "p_entail": 0.32886007697096087,
            "p_neutral": 0.33448160283067996,
            "similarity": -0.013730875909527242,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33316371716921545,
            "p_entail": 0.32548418652616773,
            "p_neutral": 0.3413520963046169,
            "similarity": 0.008251229524805616,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.32886007697096087,
        "text": "at every one of our 27 assembly plants with",
        "weight": 0.05592774406045859
      },
      {
        "cci_share": 0.05585995368723576,
        "claim_id": "F0000-2023Q1-doc2:1:2",
        "confidence": 0.5975521683119241,
        "contradiction": 0.34518252734454263,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34518252734454263,
            "p_entail": 0.3208391370383707,
            "p_neutral": 0.33397833561708673,
            "similarity": 0.0,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.33764031981911213,
            "p_entail": 0.32669959953367,
            "p_neutral": 0.33566008064721786,
            "similarity": -0.02830692585361489,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3341234309110441,
            "p_entail": 0.32333418533977826,
            "p_neutral": 0.3425423837491777,
            "similarity": -0.034020690871988585,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.32669959953367,
        "text": "have",
        "weight": 0.05536933523082824
      },
      {
        "cci_share": 0.05581592783263332,
        "claim_id": "F0000-2023Q1-doc2:7:17",
        "confidence": 0.6036863282897078,
        "contradiction": 0.34140577849919385,
        "intensity": 0.6666666666666666,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34140577849919385,
            "p_entail": 0.328826962842454,
            "p_neutral": 0.32976725865835216,
            "similarity": 0.04776973164738614,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "entail",
            "modality": "image",
            "p_contradict": 0.33387690569967876,
            "p_entail": 0.33476396061433866,
            "p_neutral": 0.33135913368598263,
            "similarity": 0.04805806568334534,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3304428546637676,
            "p_entail": 0.3313592322838442,
            "p_neutral": 0.3381979130523883,
            "similarity": 0.04950737714883371,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.33476396061433866,
        "text": "document routing to all 9 assembly plants, cutting costs by",
        "weight": 0.05593772804769128
      },
      {
        "cci_share": 0.0555604785753583,
        "claim_id": "F0000-2023Q1-doc2:18:19",
        "confidence": 0.5955960025596813,
        "contradiction": 0.34445957644519365,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34445957644519365,
            "p_entail": 0.32222567838581223,
            "p_neutral": 0.3333147451689941,
            "similarity": -0.032826608214930636,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.3369204359606481,
            "p_entail": 0.32809907142214045,
            "p_neutral": 0.3349804926172116,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3334179978765082,
            "p_entail": 0.32472601212817637,
            "p_neutral": 0.3418559899953154,
            "similarity": 0.0,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.32809907142214045,
        "text": "already.",
        "weight": 0.055188076416875675
      },
      {
        "cci_share": 0.0555416369833469,
        "claim_id": "F0000-2023Q1-doc0:17:18",
        "confidence": 0.5973670034078387,
        "contradiction": 0.3433218983574171,
        "intensity": 0.3333333333333333,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.3433218983574171,
            "p_entail": 0.32248124165776315,
            "p_neutral": 0.3341968599848198,
            "similarity": -0.06565321642986127,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33579625212473924,
            "p_entail": 0.3283481400266464,
            "p_neutral": 0.3358556078486143,
            "similarity": -0.08492077756084467,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3322964993133168,
            "p_entail": 0.3249637176632613,
            "p_neutral": 0.34273978302342184,
            "similarity": 0.0,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.3283481400266464,
        "text": "90.2%",
        "weight": 0.05535217780392732
      },
      {
        "cci_share": 0.05550038184049439,
        "claim_id": "F0000-2023Q1-doc2:0:1",
        "confidence": 0.6026913286598314,
        "contradiction": 0.3400361478895175,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.3400361478895175,
            "p_entail": 0.3212606090925768,
            "p_neutral": 0.33870324301790566,
            "similarity": 0.032826608214930636,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33255852022586774,
            "p_entail": 0.32708169047249785,
            "p_neutral": 0.34035978930163446,
            "similarity": 0.05661385170722978,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.32904673409595725,
            "p_entail": 0.3236652928434272,
            "p_neutral": 0.34728797306061554,
            "similarity": 0.06804138174397717,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.32708169047249785,
        "text": "We",
        "weight": 0.055845531130028325
      },
      {
        "cci_share": 0.055488629428981154,
        "claim_id": "F0000-2023Q1-doc0:0:3",
        "confidence": 0.5969570731037361,
        "contradiction": 0.34322977456957304,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34322977456957304,
            "p_entail": 0.3226090577869165,
            "p_neutral": 0.33416116764351045,
            "similarity": 0.08808303292720551,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3357047486272774,
            "p_entail": 0.3284769125648194,
            "p_neutral": 0.3358183388079032,
            "similarity": 0.07595545253127498,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33220632739278694,
            "p_entail": 0.3250915326997433,
            "p_neutral": 0.34270213990746984,
            "similarity": -0.015214515486254609,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.3284769125648194,
        "text": "The computer vision",
        "weight": 0.05531419355814465
      },
      {
        "cci_share": 0.05516013627672213,
        "claim_id": "F0000-2023Q1-doc2:6:7",
        "confidence": 0.5958063346638756,
        "contradiction": 0.34185683985502574,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34185683985502574,
            "p_entail": 0.3251808590750973,
            "p_neutral": 0.33296230106987695,
            "similarity": 0.032826608214930636,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3343381987891508,
            "p_entail": 0.3310720078085206,
            "p_neutral": 0.33458979340232864,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3308664883282293,
            "p_entail": 0.3276722315275872,
            "p_neutral": 0.34146128014418364,
            "similarity": 0.034020690871988585,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.3310720078085206,
        "text": "vision",
        "weight": 0.05520756584291163
      },
      {
        "cci_share": 0.0549455165345388,
        "claim_id": "F0000-2023Q1-doc2:5:6",
        "confidence": 0.5951052059408547,
        "contradiction": 0.34092792135284405,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34092792135284405,
            "p_entail": 0.31892069040205784,
            "p_neutral": 0.34015138824509816,
            "similarity": 0.06565321642986127,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33344899806827083,
            "p_entail": 0.32471720911088453,
            "p_neutral": 0.34183379282084464,
            "similarity": 0.02830692585361489,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.32991286421931987,
            "p_entail": 0.3213109539921028,
            "p_neutral": 0.3487761817885774,
            "similarity": 0.034020690871988585,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.32471720911088453,
        "text": "computer",
        "weight": 0.05514259907789332
      },
      {
        "cci_share": 0.0548978430386164,
        "claim_id": "F0000-2023Q1-doc1:0:3",
        "confidence": 0.5958642906758208,
        "contradiction": 0.34019817632108823,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34019817632108823,
            "p_entail": 0.3234039989355754,
            "p_neutral": 0.3363978247433364,
            "similarity": 0.05685735326841776,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3327090009967799,
            "p_entail": 0.3292560157884652,
            "p_neutral": 0.33803498321475495,
            "similarity": 0.03268602252303067,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.32921920534248494,
            "p_entail": 0.3258402446643844,
            "p_neutral": 0.3449405499931306,
            "similarity": -0.019641855032959656,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.3292560157884652,
        "text": "Our computer vision",
        "weight": 0.05521293606165437
      },
      {
        "cci_share": 0.05483166070461674,
        "claim_id": "F0000-2023Q1-doc0:18:19",
        "confidence": 0.5957401466685655,
        "contradiction": 0.33985885605654675,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.33985885605654675,
            "p_entail": 0.3228123994665304,
            "p_neutral": 0.33732874447692285,
            "similarity": 0.032826608214930636,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3323767200351873,
            "p_entail": 0.32865328556499274,
            "p_neutral": 0.33896999439981984,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3288809250619173,
            "p_entail": 0.3252343878288432,
            "p_neutral": 0.34588468710923953,
            "similarity": 0.0,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.32865328556499274,
        "text": "coverage.",
        "weight": 0.05520143284650575
      },
      {
        "cci_share": 0.054782705794360446,
        "claim_id": "F0000-2023Q1-doc2:17:18",
        "confidence": 0.6022827087589891,
        "contradiction": 0.33586685177213155,
        "intensity": 0.3333333333333333,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.33586685177213155,
            "p_entail": 0.33450139748298696,
            "p_neutral": 0.32963175074488144,
            "similarity": 0.0,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "entail",
            "modality": "image",
            "p_contradict": 0.32838658571700663,
            "p_entail": 0.340464602024589,
            "p_neutral": 0.3311488122584044,
            "similarity": 0.05661385170722978,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3250109057888064,
            "p_entail": 0.33700386635270174,
            "p_neutral": 0.3379852278584918,
            "similarity": -0.034020690871988585,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.340464602024589,
        "text": "98.2%",
        "weight": 0.05580766830654357
      },
      {
        "cci_share": 0.05462600732365791,
        "claim_id": "F0000-2023Q1-doc1:9:12",
        "confidence": 0.6025746137056819,
        "contradiction": 0.3347439119398646,
        "intensity": 0.3333333333333333,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3347439119398646,
            "p_entail": 0.32476016093182725,
            "p_neutral": 0.3404959271283082,
            "similarity": 0.044041516463602756,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.32732094526167027,
            "p_entail": 0.3305823185756945,
            "p_neutral": 0.3420967361626352,
            "similarity": 0.03797772626563749,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.32384694720928686,
            "p_entail": 0.327111659737267,
            "p_neutral": 0.34904139305344606,
            "similarity": 0.0,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.3305823185756945,
        "text": "across all assembly",
        "weight": 0.055834716292821704
      },
      {
        "cci_share": 0.054553481694310374,
        "claim_id": "F0000-2023Q1-doc1:12:13",
        "confidence": 0.5955326131076553,
        "contradiction": 0.3382524750365073,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.3382524750365073,
            "p_entail": 0.32674244087351684,
            "p_neutral": 0.3350050840899758,
            "similarity": -0.032826608214930636,
            "surface_text": "Internal audit: computer vision document routing remains a manual prototype at assembly plants; the pilot has not moved past testing.",
            "timestamp": 151.1
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3307742248102668,
            "p_entail": 0.33262278086439906,
            "p_neutral": 0.3366029943253342,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified computer vision document routing output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          },
          {
            "decisive": false,
            "evidence_id": "F0000-2023Q1-ev02",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3273190881606814,
            "p_entail": 0.329186529241818,
            "p_neutral": 0.3434943825975005,
            "similarity": -0.034020690871988585,
            "surface_text": "Investor day slide: industry outlook and a high-level overview of computer vision document routing concepts for assembly plants.",
            "timestamp": null
          }
        ],
        "support": 0.33262278086439906,
        "text": "plants.",
        "weight": 0.05518220273419916
      }
    ],
    "firm_id": "F0000",
    "flagged": true,
    "format": "aiwash.report.v1",
    "gate": [
      0.5069120260514314,
      0.5131500339576239,
      0.4982462053637704,
      0.5158392108879895
    ],
    "model_version": "aiwash-0.1.0",
    "motivation_probs": [
      0.19832514300915383,
      0.20399025164900264,
      0.2045317337048286,
      0.1886178140639165,
      0.2045350575730984
    ],
    "operational_notes": [
      {
        "direction": "below",
        "group": "patents",
        "mean_z": -0.77232562123776
      },
      {
        "direction": "below",
        "group": "talent",
        "mean_z": -0.7755266027554378
      },
      {
        "direction": "below",
        "group": "rnd",
        "mean_z": -1.0401501955866572
      },
      {
        "direction": "below",
        "group": "compute",
        "mean_z": -0.7420817453464351
      }
    ],
    "p_wash": 0.873,
    "quarter": "2023Q1",
    "sector": "manufacturing",
    "signals": {
      "cci": 0.3421507862211459,
      "cii": 0.22335456641965007,
      "ess": 0.3290046927334649,
      "tgi": 0.3482736583632497
    },
    "threshold": 50.0
  },
  {
    "ablation": "full",
    "attribution": {
      "awrs": 12.1,
      "baseline": 50.0,
      "interactions": [
        [
          -0.0,
          0.5432659292149864,
          0.009026874695950548,
          0.30238490040821325
        ],
        [
          0.5432659292149864,
          -0.0,
          0.01845641323738517,
          0.6150614023782917
        ],
        [
          0.009026874695950548,
          0.01845641323738517,
          -0.0,
          0.010232135086553084
        ],
        [
          0.30238490040821325,
          0.6150614023782917,
          0.010232135086553084,
          -0.0
        ]
      ],
      "shapley": {
        "contradiction": -9.067010551621292,
        "grounding_deficit": -10.257984061869367,
        "intensity": -0.309647998832666,
        "support_deficit": -18.265357387676673
      }
    },
    "awrs": 12.1,
    "claims": [
      {
        "cci_share": 0.03655547644577941,
        "claim_id": "F0005-2023Q1-doc2:8:9",
        "confidence": 0.6005558954811948,
        "contradiction": 0.34379923126897677,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34379923126897677,
            "p_entail": 0.32374896535121656,
            "p_neutral": 0.3324518033798066,
            "similarity": 0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.3404299334598438,
            "p_entail": 0.32537274082433265,
            "p_neutral": 0.3341973257158235,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.32537274082433265,
        "text": "for",
        "weight": 0.035812616987729876
      },
      {
        "cci_share": 0.036543539454830666,
        "claim_id": "F0005-2023Q1-doc0:9:10",
        "confidence": 0.6008191349209067,
        "contradiction": 0.34353638447979845,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34353638447979845,
            "p_entail": 0.32349001294193114,
            "p_neutral": 0.3329736025782704,
            "similarity": -0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.3401682962160214,
            "p_entail": 0.32511118370815445,
            "p_neutral": 0.33472052007582404,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.32511118370815445,
        "text": "relevant",
        "weight": 0.035828314599395006
      },
      {
        "cci_share": 0.036211108084282025,
        "claim_id": "F0005-2023Q1-doc1:11:12",
        "confidence": 0.6016953098477708,
        "contradiction": 0.33991558383578907,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.33991558383578907,
            "p_entail": 0.3274691921918033,
            "p_neutral": 0.33261522397240756,
            "similarity": -0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.33656496795473123,
            "p_entail": 0.32909267828724353,
            "p_neutral": 0.3343423537580252,
            "similarity": -0.02830692585361489,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.32909267828724353,
        "text": "teams.",
        "weight": 0.035880563053379284
      },
      {
        "cci_share": 0.03618758573382014,
        "claim_id": "F0005-2023Q1-doc2:0:3",
        "confidence": 0.5989711987400479,
        "contradiction": 0.34123970452454633,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34123970452454633,
            "p_entail": 0.33005921169445235,
            "p_neutral": 0.3287010837810014,
            "similarity": 0.030429030972509225,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.3378829753248054,
            "p_entail": 0.331702350144643,
            "p_neutral": 0.3304146745305515,
            "similarity": 0.10127393670836665,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.331702350144643,
        "text": "The predictive analytics",
        "weight": 0.0357181176449386
      },
      {
        "cci_share": 0.03608159494219988,
        "claim_id": "F0005-2023Q1-doc0:2:6",
        "confidence": 0.6008536368959791,
        "contradiction": 0.3391742862723533,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.3391742862723533,
            "p_entail": 0.3298968156644,
            "p_neutral": 0.3309288980632467,
            "similarity": 0.06804138174397716,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.33582742240247565,
            "p_entail": 0.33152882752830304,
            "p_neutral": 0.3326437500692213,
            "similarity": 0.05661385170722978,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.33152882752830304,
        "text": "is studying predictive analytics",
        "weight": 0.03583037203655928
      },
      {
        "cci_share": 0.035861011468203884,
        "claim_id": "F0005-2023Q1-doc1:0:2",
        "confidence": 0.601674945776458,
        "contradiction": 0.3366406018423564,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.3366406018423564,
            "p_entail": 0.3282964650609027,
            "p_neutral": 0.3350629330967409,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3333059049874331,
            "p_entail": 0.32990785620261603,
            "p_neutral": 0.3367862388099508,
            "similarity": 0.049029033784546004,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.32990785620261603,
        "text": "Management reviewed",
        "weight": 0.035879348693997046
      },
      {
        "cci_share": 0.035859565389046354,
        "claim_id": "F0005-2023Q1-doc0:0:1",
        "confidence": 0.5956076862229608,
        "contradiction": 0.34005613573988436,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34005613573988436,
            "p_entail": 0.3288405482775374,
            "p_neutral": 0.33110331598257825,
            "similarity": 0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.3367049550973688,
            "p_entail": 0.3304716386055242,
            "p_neutral": 0.332823406297107,
            "similarity": 0.05661385170722978,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3304716386055242,
        "text": "The",
        "weight": 0.035517543166502484
      },
      {
        "cci_share": 0.035859565389046354,
        "claim_id": "F0005-2023Q1-doc0:8:9",
        "confidence": 0.5956076862229608,
        "contradiction": 0.34005613573988436,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34005613573988436,
            "p_entail": 0.3288405482775374,
            "p_neutral": 0.33110331598257825,
            "similarity": 0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.3367049550973688,
            "p_entail": 0.3304716386055242,
            "p_neutral": 0.332823406297107,
            "similarity": 0.05661385170722978,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3304716386055242,
        "text": "approaches",
        "weight": 0.035517543166502484
      },
      {
        "cci_share": 0.035841736872465016,
        "claim_id": "F0005-2023Q1-doc1:2:6",
        "confidence": 0.6040620205935427,
        "contradiction": 0.3351300747838758,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.3351300747838758,
            "p_entail": 0.3335493033785515,
            "p_neutral": 0.33132062183757266,
            "similarity": 0.05143444998736397,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "entail",
            "modality": "image",
            "p_contradict": 0.33180320776469685,
            "p_entail": 0.3351792715112311,
            "p_neutral": 0.3330175207240721,
            "similarity": 0.053495061563864105,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3351792715112311,
        "text": "potential predictive analytics customer",
        "weight": 0.03602169580404717
      },
      {
        "cci_share": 0.03573560042598408,
        "claim_id": "F0005-2023Q1-doc0:6:7",
        "confidence": 0.6037950285147784,
        "contradiction": 0.3342854221966811,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3342854221966811,
            "p_entail": 0.3282693058393505,
            "p_neutral": 0.33744527196396834,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33096232282654975,
            "p_entail": 0.3298688699663584,
            "p_neutral": 0.3391688072070918,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3298688699663584,
        "text": "customer",
        "weight": 0.03600577441333651
      },
      {
        "cci_share": 0.03573560042598408,
        "claim_id": "F0005-2023Q1-doc2:3:4",
        "confidence": 0.6037950285147784,
        "contradiction": 0.3342854221966811,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3342854221966811,
            "p_entail": 0.3282693058393505,
            "p_neutral": 0.33744527196396834,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33096232282654975,
            "p_entail": 0.3298688699663584,
            "p_neutral": 0.3391688072070918,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3298688699663584,
        "text": "customer",
        "weight": 0.03600577441333651
      },
      {
        "cci_share": 0.03572327403056737,
        "claim_id": "F0005-2023Q1-doc0:7:8",
        "confidence": 0.5934185924796626,
        "contradiction": 0.34001336882211947,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34001336882211947,
            "p_entail": 0.332308722486247,
            "p_neutral": 0.3276779086916335,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.33666266722197025,
            "p_entail": 0.3339570725136702,
            "p_neutral": 0.3293802602643595,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3339570725136702,
        "text": "triage",
        "weight": 0.03538700215213752
      },
      {
        "cci_share": 0.03572327403056737,
        "claim_id": "F0005-2023Q1-doc1:6:7",
        "confidence": 0.5934185924796626,
        "contradiction": 0.34001336882211947,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34001336882211947,
            "p_entail": 0.332308722486247,
            "p_neutral": 0.3276779086916335,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.33666266722197025,
            "p_entail": 0.3339570725136702,
            "p_neutral": 0.3293802602643595,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3339570725136702,
        "text": "triage",
        "weight": 0.03538700215213752
      },
      {
        "cci_share": 0.03572327403056737,
        "claim_id": "F0005-2023Q1-doc2:4:5",
        "confidence": 0.5934185924796626,
        "contradiction": 0.34001336882211947,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.34001336882211947,
            "p_entail": 0.332308722486247,
            "p_neutral": 0.3276779086916335,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "contradict",
            "modality": "image",
            "p_contradict": 0.33666266722197025,
            "p_entail": 0.3339570725136702,
            "p_neutral": 0.3293802602643595,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3339570725136702,
        "text": "triage",
        "weight": 0.03538700215213752
      },
      {
        "cci_share": 0.035608272356336165,
        "claim_id": "F0005-2023Q1-doc1:8:9",
        "confidence": 0.6028106979799688,
        "contradiction": 0.3336382536322265,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3336382536322265,
            "p_entail": 0.32945353622161555,
            "p_neutral": 0.33690821014615796,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3303184626370777,
            "p_entail": 0.33105573872972466,
            "p_neutral": 0.3386257986331977,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.33105573872972466,
        "text": "with",
        "weight": 0.03594707637590534
      },
      {
        "cci_share": 0.03560495419607215,
        "claim_id": "F0005-2023Q1-doc2:6:7",
        "confidence": 0.6016206109621821,
        "contradiction": 0.33426708365389896,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.33426708365389896,
            "p_entail": 0.3317549798339595,
            "p_neutral": 0.3339779365121415,
            "similarity": -0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3309443462048977,
            "p_entail": 0.3333717096082082,
            "p_neutral": 0.335683944186894,
            "similarity": -0.05661385170722978,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3333717096082082,
        "text": "has",
        "weight": 0.035876108576120586
      },
      {
        "cci_share": 0.035570083991782624,
        "claim_id": "F0005-2023Q1-doc0:1:2",
        "confidence": 0.5993556337748641,
        "contradiction": 0.3352016795678709,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3352016795678709,
            "p_entail": 0.32561250903435707,
            "p_neutral": 0.3391858113977721,
            "similarity": 0.06804138174397717,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33187384064891784,
            "p_entail": 0.32720343473220564,
            "p_neutral": 0.3409227246188765,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.32720343473220564,
        "text": "group",
        "weight": 0.03574104244638029
      },
      {
        "cci_share": 0.0355494651553058,
        "claim_id": "F0005-2023Q1-doc0:11:12",
        "confidence": 0.6016322369873505,
        "contradiction": 0.3337396910672972,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3337396910672972,
            "p_entail": 0.3320090445085423,
            "p_neutral": 0.3342512644241604,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33041959344546384,
            "p_entail": 0.3336243845150274,
            "p_neutral": 0.3359560220395088,
            "similarity": -0.02830692585361489,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3336243845150274,
        "text": "assembly",
        "weight": 0.03587680186443826
      },
      {
        "cci_share": 0.0355494651553058,
        "claim_id": "F0005-2023Q1-doc1:9:10",
        "confidence": 0.6016322369873505,
        "contradiction": 0.3337396910672972,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3337396910672972,
            "p_entail": 0.3320090445085423,
            "p_neutral": 0.3342512644241604,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33041959344546384,
            "p_entail": 0.3336243845150274,
            "p_neutral": 0.3359560220395088,
            "similarity": -0.02830692585361489,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3336243845150274,
        "text": "assembly",
        "weight": 0.03587680186443826
      },
      {
        "cci_share": 0.0355494651553058,
        "claim_id": "F0005-2023Q1-doc2:10:11",
        "confidence": 0.6016322369873505,
        "contradiction": 0.3337396910672972,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3337396910672972,
            "p_entail": 0.3320090445085423,
            "p_neutral": 0.3342512644241604,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33041959344546384,
            "p_entail": 0.3336243845150274,
            "p_neutral": 0.3359560220395088,
            "similarity": -0.02830692585361489,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3336243845150274,
        "text": "assembly",
        "weight": 0.03587680186443826
      },
      {
        "cci_share": 0.03552629445067826,
        "claim_id": "F0005-2023Q1-doc2:9:10",
        "confidence": 0.5950319007187767,
        "contradiction": 0.33722172735847156,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.33722172735847156,
            "p_entail": 0.32629958037591966,
            "p_neutral": 0.3364786922656087,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3338840373221512,
            "p_entail": 0.3279038839679008,
            "p_neutral": 0.33821207870994796,
            "similarity": 0.02830692585361489,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3279038839679008,
        "text": "certain",
        "weight": 0.035483207668535376
      },
      {
        "cci_share": 0.0355201894669137,
        "claim_id": "F0005-2023Q1-doc0:10:11",
        "confidence": 0.5951052059408547,
        "contradiction": 0.3371222458709902,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3371222458709902,
            "p_entail": 0.325238675938655,
            "p_neutral": 0.33763907819035477,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3337849575721192,
            "p_entail": 0.3268371926670271,
            "p_neutral": 0.3393778497608536,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3268371926670271,
        "text": "to",
        "weight": 0.03548757903823008
      },
      {
        "cci_share": 0.035494692700243934,
        "claim_id": "F0005-2023Q1-doc1:10:11",
        "confidence": 0.6032177911269722,
        "contradiction": 0.3323496041621129,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "entail",
            "modality": "video",
            "p_contradict": 0.3323496041621129,
            "p_entail": 0.3403800757450598,
            "p_neutral": 0.3272703200928272,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "entail",
            "modality": "image",
            "p_contradict": 0.3290370993121299,
            "p_entail": 0.34202966146065095,
            "p_neutral": 0.3289332392272192,
            "similarity": 0.0,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.34202966146065095,
        "text": "plants",
        "weight": 0.03597135233599775
      },
      {
        "cci_share": 0.0353799768248697,
        "claim_id": "F0005-2023Q1-doc2:5:6",
        "confidence": 0.5958246915617208,
        "contradiction": 0.33538600357187964,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.33538600357187964,
            "p_entail": 0.3297848458995135,
            "p_neutral": 0.3348291505286069,
            "similarity": -0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33205758120211915,
            "p_entail": 0.3313974014330259,
            "p_neutral": 0.336545017364855,
            "similarity": -0.05661385170722978,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3313974014330259,
        "text": "program",
        "weight": 0.035530483725640744
      },
      {
        "cci_share": 0.035371224638852714,
        "claim_id": "F0005-2023Q1-doc2:7:8",
        "confidence": 0.5973700243327904,
        "contradiction": 0.3344356435261529,
        "intensity": 0.3333333333333333,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3344356435261529,
            "p_entail": 0.3261102163368761,
            "p_neutral": 0.33945414013697095,
            "similarity": 0.0,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.33111163141741473,
            "p_entail": 0.32769983444188766,
            "p_neutral": 0.34118853414069755,
            "similarity": -0.02830692585361489,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.32769983444188766,
        "text": "launched",
        "weight": 0.03562263569861332
      },
      {
        "cci_share": 0.0352588971622989,
        "claim_id": "F0005-2023Q1-doc0:12:13",
        "confidence": 0.5955326131076553,
        "contradiction": 0.33440215057897044,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.33440215057897044,
            "p_entail": 0.33314114618616736,
            "p_neutral": 0.33245670323486215,
            "similarity": 0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "entail",
            "modality": "image",
            "p_contradict": 0.3310788512452644,
            "p_entail": 0.33476542053925495,
            "p_neutral": 0.33415572821548056,
            "similarity": 0.02830692585361489,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.33476542053925495,
        "text": "plants.",
        "weight": 0.03551306637301042
      },
      {
        "cci_share": 0.0352588971622989,
        "claim_id": "F0005-2023Q1-doc2:11:12",
        "confidence": 0.5955326131076553,
        "contradiction": 0.33440215057897044,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "contradict",
            "modality": "video",
            "p_contradict": 0.33440215057897044,
            "p_entail": 0.33314114618616736,
            "p_neutral": 0.33245670323486215,
            "similarity": 0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "entail",
            "modality": "image",
            "p_contradict": 0.3310788512452644,
            "p_entail": 0.33476542053925495,
            "p_neutral": 0.33415572821548056,
            "similarity": 0.02830692585361489,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.33476542053925495,
        "text": "plants.",
        "weight": 0.03551306637301042
      },
      {
        "cci_share": 0.03511591486039132,
        "claim_id": "F0005-2023Q1-doc1:7:8",
        "confidence": 0.5954024656052298,
        "contradiction": 0.3331188786650884,
        "intensity": 0.0,
        "pairs": [
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev01",
            "label": "neutral",
            "modality": "video",
            "p_contradict": 0.3331188786650884,
            "p_entail": 0.33128664441921135,
            "p_neutral": 0.33559447691570027,
            "similarity": -0.034020690871988585,
            "surface_text": "Corporate brochure: an overview of predictive analytics customer triage ambitions and the market outlook for assembly plants.",
            "timestamp": 160.4
          },
          {
            "decisive": false,
            "evidence_id": "F0005-2023Q1-ev00",
            "label": "neutral",
            "modality": "image",
            "p_contradict": 0.3298018199439692,
            "p_entail": 0.3328953032282348,
            "p_neutral": 0.33730287682779597,
            "similarity": 0.05661385170722978,
            "surface_text": "Inspection record: verified predictive analytics customer triage output running daily across assembly plants, logged by plant supervisors.",
            "timestamp": null
          }
        ],
        "support": 0.3328953032282348,
        "text": "initiatives",
        "weight": 0.03550530535910423
      }
    ],
    "firm_id": "F0005",
    "flagged": false,
    "format": "aiwash.report.v1",
    "gate": [
      0.5074947463162834,
      0.5127019570713703,
      0.49376906221444716,
      0.5141244506097291
    ],
    "model_version": "aiwash-0.1.0",
    "motivation_probs": [
      0.19813123599141927,
      0.2041429104082287,
      0.20416181609883693,
      0.1894057574056776,
      0.20415828009583742
    ],
    "operational_notes": [
      {
        "direction": "above",
        "group": "patents",
        "mean_z": 0.7903381626343633
      },
      {
        "direction": "above",
        "group": "talent",
        "mean_z": 0.9193593399779472
      },
      {
        "direction": "above",
        "group": "rnd",
        "mean_z": 0.9510750705896587
      },
      {
        "direction": "above",
        "group": "compute",
        "mean_z": 0.8308014730236888
      }
    ],
    "p_wash": 0.121,
    "quarter": "2023Q1",
    "sector": "energy",
    "signals": {
      "cci": 0.33681274017516943,
      "cii": 0.011874211899537773,
      "ess": 0.33147370523516745,
      "tgi": 0.6240839333700676
    },
    "threshold": 50.0
  }
];
